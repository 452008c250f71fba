#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "covact/basis.hpp"
#include "covact/linalg.hpp"
#include "covact/report.hpp"

namespace covact {

/// A basis-indexed nondegenerate algebra. Dense algebras carry their whole
/// (finite) basis; rule algebras have an infinite basis evaluated through a
/// key-level product closure, with a finite window used for sampling and a
/// validity predicate for the key universe.
class Algebra {
public:
    enum class Backend { dense, rule };

    std::string name;
    Backend backend = Backend::dense;
    FieldSpec field;
    /// Dense: the full basis (product-closed). Rule: the sampling window.
    std::vector<BasisKey> window;
    /// Product of two basis keys, extended bilinearly by multiply().
    std::function<Element(const BasisKey&, const BasisKey&)> key_product;
    /// Rule backend: key-universe membership. Unset means every key is valid.
    std::function<bool(const BasisKey&)> valid;
    /// Rule backend: widens a window so that probe sets can separate all
    /// window elements (kernel/realization checks). Unset: identity.
    std::function<std::vector<BasisKey>(const std::vector<BasisKey>&)> extend_window;
    bool commutative = false;

    bool is_dense() const { return backend == Backend::dense; }

    /// Bilinear product in canonical form. Rule backends validate every
    /// output key and throw WindowExhausted on a key outside the universe.
    Element multiply(const Element& x, const Element& y) const;

    Element basis_element(const BasisKey& k) const { return Element::unit(k, field); }

    /// The probe window: window for dense, extend_window(window) for rule.
    std::vector<BasisKey> probe_window() const;

    std::string window_text() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// (ab)c = a(bc) on the given key triples (defaults: all window triples).
CheckReport check_associativity(const Algebra& alg,
                                const std::vector<std::array<BasisKey, 3>>& samples = {});

/// No nonzero a in span(window) kills every probe from either side.
CheckReport check_nondegenerate(const Algebra& alg, const std::vector<BasisKey>& window = {});

/// Solves for e with e·t = t = t·e for all targets, searching in the span
/// of the window (or of explicit search keys); deterministic minimal
/// solution, nullopt when unsolvable.
std::optional<Element> find_local_unit(const Algebra& alg, const std::vector<Element>& targets,
                                       const std::vector<BasisKey>& search = {});

/// Tensor product algebra: keys are tuples of factor keys, product legwise.
/// All factors must share one field.
AlgebraPtr tensor_algebra(const std::vector<AlgebraPtr>& parts, const std::string& name);

// -- element/vector plumbing shared by the checkers --------------------------

/// Dense index of a finite key set, for moving elements into coordinates.
class KeyIndex {
public:
    KeyIndex() = default;
    explicit KeyIndex(std::vector<BasisKey> keys);

    std::size_t size() const { return keys_.size(); }
    const std::vector<BasisKey>& keys() const { return keys_; }
    std::optional<std::size_t> find(const BasisKey& k) const;

    /// Coordinates of x; throws UsageError if x has support off the index.
    std::vector<Scalar> vec(const Element& x, const FieldSpec& f) const;
    Element unvec(const std::vector<Scalar>& v) const;

    /// Index of all keys appearing in the elements.
    static KeyIndex from_support(std::span<const Element> xs);

    /// Index of all pure tensor keys over the given per-leg key lists.
    static KeyIndex product(const std::vector<std::vector<BasisKey>>& legs);

private:
    std::vector<BasisKey> keys_;
    std::map<BasisKey, std::size_t> pos_;
};

} // namespace covact
