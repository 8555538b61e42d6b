#ifndef CLS_SUBMODULES_HPP
#define CLS_SUBMODULES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cls/modules.hpp"

namespace cls {

/// Fixed column order for rows over the polynomial ring in d:
/// (x, y) ungraded; (x_lo, y_lo, ..., x_hi, y_hi) graded.
struct ColumnLayout {
    bool graded = false;
    GradeWindow window;  // meaningful when graded
    int rank = 2;

    int columns() const { return rank * (graded ? window.size() : 1); }
    int column_of(const BasisId& b) const;
    BasisId basis_at(int col) const;
    friend bool operator==(const ColumnLayout&, const ColumnLayout&) = default;
};

/// One submodule element as a vector of polynomials in d (parameters
/// evaluated), one per column.
using RowVector = std::vector<Poly>;

ModuleElement row_to_element(const ColumnLayout& layout, const RowVector& row);
RowVector element_to_row(const ColumnLayout& layout, const ModuleElement& e);

/// Hermite-style canonical generating set over the Euclidean ring Q[d]:
/// echelon rows with strictly increasing pivot columns, monic pivots, and
/// all other entries in a pivot column of degree below the pivot.
/// Canonicalization is a fixed point and depends only on the row module.
class CanonicalBasis {
public:
    explicit CanonicalBasis(ColumnLayout layout) : layout_(std::move(layout)) {}
    static CanonicalBasis canonicalize(const ColumnLayout& layout, std::vector<RowVector> rows);

    const ColumnLayout& layout() const { return layout_; }
    const std::vector<RowVector>& rows() const { return rows_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    /// Remainder after division by the pivots; zero iff v is in the module.
    RowVector reduce(RowVector v) const;
    bool contains(const RowVector& v) const;
    bool is_empty() const { return rows_.empty(); }
    /// Pivot 1 in every column.
    bool is_full() const;

    std::string str() const;  // "{(d + 2)*x, y}"
    friend bool operator==(const CanonicalBasis&, const CanonicalBasis&) = default;

private:
    ColumnLayout layout_;
    std::vector<RowVector> rows_;
    std::vector<int> pivots_;
};

struct ClosureResult {
    CanonicalBasis basis;
    int skipped = 0;  // boundary actions skipped in the fixed-point pass
    int passes = 0;
};

/// Smallest row module containing the seeds and closed under every
/// lambda-coefficient of every generator action. Ungraded modules default
/// to generators {L_0, G_0}; graded modules need a window and default to
/// all generator grades that can act within it. Iteration cap: 1000 passes.
ClosureResult close_under_actions(const ModuleSpec& spec, const std::vector<ModuleElement>& seeds,
                                  std::vector<GenId> generators = {},
                                  std::optional<GradeWindow> window = std::nullopt);

struct ProbeResult {
    bool all_full = true;
    std::vector<CanonicalBasis> proper;  // distinct proper closures, in trial order
    int trials = 0;
};

/// Runs closures of random nonzero seeds (coefficients in [-3, 3], degree
/// <= max_deg); deterministic for a fixed rng_seed.
ProbeResult irreducibility_probe(const ModuleSpec& spec, int trials, int max_deg, uint64_t rng_seed);

/// The classified irreducible submodule of a graded family generated by the
/// combination sum_i coeffs[i] * x_{I[i]+k} over all complete shifts k in
/// the window:
///   Mg      a=1/2: {X_k, (d+b)Y_k}; otherwise {X_k, Y_k}
///   Mgprime a=0:   {(d+b)X_k, Y_k}; otherwise {X_k, Y_k}
///   MA:     {X_k, sum_i c_i delta_{i+k}(d) y_{i+k}}
///   MAprime: {sum_i c_i delta_{i+k}(d) x_{i+k}, Y_k}
/// with delta_j(d) = d+b when the pattern bit at j is 0, else 1.
CanonicalBasis expected_graded_submodule(const ModuleSpec& spec, const std::vector<int>& index_set,
                                         const std::vector<Rational>& coeffs, GradeWindow window);

/// Deterministic generator used by the probe (exposed for tests).
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform-ish draw from [lo, hi].
    int in_range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1)); }
};

}  // namespace cls

#endif
