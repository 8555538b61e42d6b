#include "cls/submodules.hpp"

#include <algorithm>

#include "cls/expr.hpp"

namespace cls {

namespace {

void require_poly_in_del(const Poly& p) {
    for (int i = 0; i < kVarCount; ++i) {
        VarId v = static_cast<VarId>(i);
        if (v != VarId::Del && p.contains_var(v))
            throw Error("row entries must be polynomials in d with parameters evaluated");
    }
}

bool row_is_zero(const RowVector& r) {
    return std::all_of(r.begin(), r.end(), [](const Poly& p) { return p.is_zero(); });
}

void subtract_multiple(RowVector& r, const Poly& q, const RowVector& pivot) {
    if (q.is_zero()) return;
    for (size_t c = 0; c < r.size(); ++c) r[c] -= q * pivot[c];
}

}  // namespace

int ColumnLayout::column_of(const BasisId& b) const {
    int kind_offset = static_cast<int>(b.kind);
    if (!graded) {
        if (b.grade) throw LayoutMismatch("graded basis id in ungraded layout");
        return kind_offset;
    }
    if (!b.grade) throw LayoutMismatch("ungraded basis id in graded layout");
    if (!window.contains(*b.grade))
        throw LayoutMismatch("basis grade " + std::to_string(*b.grade) + " outside the storage window");
    return rank * (*b.grade - window.lo) + kind_offset;
}

BasisId ColumnLayout::basis_at(int col) const {
    if (col < 0 || col >= columns()) throw LayoutMismatch("column index out of range");
    BasisKind kind = static_cast<BasisKind>(col % rank);
    if (!graded) return BasisId{kind, std::nullopt};
    return BasisId{kind, window.lo + col / rank};
}

ModuleElement row_to_element(const ColumnLayout& layout, const RowVector& row) {
    if (static_cast<int>(row.size()) != layout.columns()) throw LayoutMismatch("row width mismatch");
    ModuleElement e;
    for (size_t c = 0; c < row.size(); ++c)
        if (!row[c].is_zero()) e.add(layout.basis_at(static_cast<int>(c)), row[c]);
    return e;
}

RowVector element_to_row(const ColumnLayout& layout, const ModuleElement& e) {
    RowVector row(static_cast<size_t>(layout.columns()));
    for (const auto& [b, coeff] : e.support()) {
        require_poly_in_del(coeff);
        row[static_cast<size_t>(layout.column_of(b))] = coeff;
    }
    return row;
}

CanonicalBasis CanonicalBasis::canonicalize(const ColumnLayout& layout, std::vector<RowVector> rows) {
    CanonicalBasis result(layout);
    const int columns = layout.columns();

    std::vector<RowVector> active;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != columns) throw LayoutMismatch("row width mismatch");
        for (const Poly& p : r) require_poly_in_del(p);
        if (!row_is_zero(r)) active.push_back(std::move(r));
    }

    for (int col = 0; col < columns && !active.empty(); ++col) {
        // Euclid on the entries of this column until a single survivor.
        for (;;) {
            std::vector<size_t> nz;
            for (size_t k = 0; k < active.size(); ++k)
                if (!active[k][static_cast<size_t>(col)].is_zero()) nz.push_back(k);
            if (nz.empty()) break;
            size_t best = nz[0];
            for (size_t k : nz)
                if (active[k][static_cast<size_t>(col)].degree_in(VarId::Del) <
                    active[best][static_cast<size_t>(col)].degree_in(VarId::Del))
                    best = k;
            if (nz.size() == 1) {
                // Pivot found; make it monic and retire it.
                RowVector pivot = std::move(active[best]);
                active.erase(active.begin() + static_cast<long>(best));
                Poly& lead = pivot[static_cast<size_t>(col)];
                Rational lc = lead.coeff_of(VarId::Del, lead.degree_in(VarId::Del)).constant_value();
                if (!lc.is_one()) {
                    Rational inv = lc.inverse();
                    for (Poly& p : pivot) p = p.scaled(inv);
                }
                result.rows_.push_back(std::move(pivot));
                result.pivots_.push_back(col);
                break;
            }
            const RowVector& pivot = active[best];
            for (size_t k : nz) {
                if (k == best) continue;
                auto [q, rem] = Poly::divmod_univar(active[k][static_cast<size_t>(col)],
                                                    pivot[static_cast<size_t>(col)]);
                subtract_multiple(active[k], q, pivot);
            }
            std::erase_if(active, row_is_zero);
        }
    }

    // Reduce entries above each pivot below the pivot degree.
    for (size_t k = 0; k < result.rows_.size(); ++k) {
        int col = result.pivots_[k];
        const Poly& pivot_poly = result.rows_[k][static_cast<size_t>(col)];
        for (size_t up = 0; up < k; ++up) {
            auto [q, rem] = Poly::divmod_univar(result.rows_[up][static_cast<size_t>(col)], pivot_poly);
            subtract_multiple(result.rows_[up], q, result.rows_[k]);
        }
    }
    return result;
}

RowVector CanonicalBasis::reduce(RowVector v) const {
    if (static_cast<int>(v.size()) != layout_.columns()) throw LayoutMismatch("row width mismatch");
    for (const Poly& p : v) require_poly_in_del(p);
    for (size_t k = 0; k < rows_.size(); ++k) {
        int col = pivots_[k];
        auto [q, rem] = Poly::divmod_univar(v[static_cast<size_t>(col)], rows_[k][static_cast<size_t>(col)]);
        subtract_multiple(v, q, rows_[k]);
    }
    return v;
}

bool CanonicalBasis::contains(const RowVector& v) const { return row_is_zero(reduce(v)); }

bool CanonicalBasis::is_full() const {
    if (static_cast<int>(rows_.size()) != layout_.columns()) return false;
    for (size_t k = 0; k < rows_.size(); ++k)
        if (rows_[k][static_cast<size_t>(pivots_[k])] != Poly(1)) return false;
    return true;
}

std::string CanonicalBasis::str() const {
    if (rows_.empty()) return "0";
    std::string out = "{";
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (k) out += ", ";
        out += print_module_element(row_to_element(layout_, rows_[k]));
    }
    return out + "}";
}

namespace {

std::vector<GenId> default_generators(const ModuleSpec& spec, const std::optional<GradeWindow>& window) {
    std::vector<GenId> gens;
    std::vector<GenKind> kinds = {GenKind::L};
    if (spec.rank() == 2) kinds.push_back(GenKind::G);
    if (!spec.graded()) {
        for (GenKind k : kinds) gens.push_back({k, 0});
        return gens;
    }
    int span = window->hi - window->lo;
    for (GenKind k : kinds)
        for (int i = -span; i <= span; ++i) gens.push_back({k, i});
    return gens;
}

// Splits an action result into one row per lambda power.
std::vector<RowVector> lambda_coefficient_rows(const ColumnLayout& layout, const LambdaModuleElement& out) {
    int max_deg = -1;
    for (const auto& [b, p] : out.support()) max_deg = std::max(max_deg, p.degree_in(VarId::Lam1));
    std::vector<RowVector> rows;
    for (int k = 0; k <= max_deg; ++k) {
        RowVector row(static_cast<size_t>(layout.columns()));
        bool nonzero = false;
        for (const auto& [b, p] : out.support()) {
            Poly q = p.coeff_of(VarId::Lam1, k);
            if (q.is_zero()) continue;
            require_poly_in_del(q);
            row[static_cast<size_t>(layout.column_of(b))] = q;
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ClosureResult close_under_actions(const ModuleSpec& spec, const std::vector<ModuleElement>& seeds,
                                  std::vector<GenId> generators, std::optional<GradeWindow> window) {
    if (spec.symbolic_params())
        throw Error("closure requires evaluated (rational) parameters");
    if (spec.graded() && !window) throw WindowRequired("graded closure requires a storage window");
    if (window && window->lo > window->hi) throw WindowRequired("empty storage window");
    if (spec.pattern() && window) {
        const GradeWindow pw = spec.pattern()->window();
        if (pw.lo > window->lo || pw.hi < window->hi)
            throw OutOfWindow("storage window exceeds the pattern window");
    }

    ColumnLayout layout{spec.graded(), spec.graded() ? *window : GradeWindow{}, spec.rank()};
    if (generators.empty()) generators = default_generators(spec, window);

    std::vector<RowVector> rows;
    for (const auto& seed : seeds) rows.push_back(element_to_row(layout, seed));
    CanonicalBasis basis = CanonicalBasis::canonicalize(layout, std::move(rows));

    const Poly lam = pvar(VarId::Lam1);
    constexpr int kMaxPasses = 1000;
    for (int pass = 1; pass <= kMaxPasses; ++pass) {
        std::vector<RowVector> fresh;
        int skipped = 0;
        for (const RowVector& row : basis.rows()) {
            ModuleElement elem = row_to_element(layout, row);
            for (const GenId& g : generators) {
                if (spec.graded()) {
                    bool leaves = false;
                    for (const auto& [b, p] : elem.support())
                        if (!window->contains(*b.grade + g.grade)) leaves = true;
                    if (leaves) {
                        ++skipped;
                        continue;
                    }
                }
                LambdaModuleElement out = spec.act(g, elem, lam);
                for (RowVector& candidate : lambda_coefficient_rows(layout, out)) {
                    RowVector rem = basis.reduce(std::move(candidate));
                    if (!row_is_zero(rem)) fresh.push_back(std::move(rem));
                }
            }
        }
        if (fresh.empty()) return {std::move(basis), skipped, pass};
        std::vector<RowVector> all = basis.rows();
        for (auto& r : fresh) all.push_back(std::move(r));
        basis = CanonicalBasis::canonicalize(layout, std::move(all));
    }
    throw NonTermination("closure did not stabilize within 1000 passes");
}

ProbeResult irreducibility_probe(const ModuleSpec& spec, int trials, int max_deg, uint64_t rng_seed) {
    if (spec.graded()) throw Error("the irreducibility probe applies to ungraded families");
    if (spec.symbolic_params()) throw Error("the probe requires evaluated (rational) parameters");

    SplitMix64 rng(rng_seed);
    ColumnLayout layout{false, GradeWindow{}, spec.rank()};
    ProbeResult result;
    result.trials = trials;

    for (int t = 0; t < trials; ++t) {
        RowVector row;
        do {
            row.assign(static_cast<size_t>(layout.columns()), Poly());
            for (Poly& entry : row)
                for (int d = 0; d <= max_deg; ++d) {
                    int coeff = rng.in_range(-3, 3);
                    if (coeff != 0) entry += Poly::term(Monomial::var(VarId::Del, d), Rational(coeff));
                }
        } while (row_is_zero(row));

        ClosureResult closure = close_under_actions(spec, {row_to_element(layout, row)});
        if (!closure.basis.is_full()) {
            result.all_full = false;
            if (std::find(result.proper.begin(), result.proper.end(), closure.basis) == result.proper.end())
                result.proper.push_back(closure.basis);
        }
    }
    return result;
}

CanonicalBasis expected_graded_submodule(const ModuleSpec& spec, const std::vector<int>& index_set,
                                         const std::vector<Rational>& coeffs, GradeWindow window) {
    if (!spec.graded() || spec.rank() != 2)
        throw Error("expected_graded_submodule applies to graded rank-two families");
    if (spec.symbolic_params()) throw Error("parameters must be evaluated");
    if (index_set.empty() || index_set.size() != coeffs.size())
        throw Error("index set and coefficient list must be nonempty and aligned");
    if (window.lo > window.hi) throw WindowTooSmall("empty window");

    Family family = spec.tag().family;
    const Rational b = spec.tag().b.constant_value();
    const Poly del_b = pdel() + Poly(b);

    auto delta = [&](int j) {
        return spec.pattern()->bit(j) == 0 ? del_b : Poly(1);
    };

    ColumnLayout layout{true, window, 2};
    std::vector<RowVector> rows;
    bool any_k = false;
    for (int k = window.lo - *std::min_element(index_set.begin(), index_set.end());
         k <= window.hi - *std::max_element(index_set.begin(), index_set.end()); ++k) {
        bool fits = true;
        for (int i : index_set)
            if (!window.contains(i + k)) fits = false;
        if (!fits) continue;
        any_k = true;

        ModuleElement xrow, yrow;
        for (size_t n = 0; n < index_set.size(); ++n) {
            int grade = index_set[n] + k;
            Poly coeff(coeffs[n]);
            switch (family) {
                case Family::Mg:
                    xrow.add(BasisId{BasisKind::x, grade}, coeff);
                    yrow.add(BasisId{BasisKind::y, grade},
                             spec.tag().a == Poly(frac(1, 2)) ? coeff * del_b : coeff);
                    break;
                case Family::Mgprime:
                    xrow.add(BasisId{BasisKind::x, grade},
                             spec.tag().a == Poly(0) ? coeff * del_b : coeff);
                    yrow.add(BasisId{BasisKind::y, grade}, coeff);
                    break;
                case Family::MA:
                    xrow.add(BasisId{BasisKind::x, grade}, coeff);
                    yrow.add(BasisId{BasisKind::y, grade}, coeff * delta(grade));
                    break;
                case Family::MAprime:
                    xrow.add(BasisId{BasisKind::x, grade}, coeff * delta(grade));
                    yrow.add(BasisId{BasisKind::y, grade}, coeff);
                    break;
                default:
                    throw Error("expected_graded_submodule applies to graded rank-two families");
            }
        }
        rows.push_back(element_to_row(layout, xrow));
        rows.push_back(element_to_row(layout, yrow));
    }
    if (!any_k) throw WindowTooSmall("no complete shifted copy fits in the window");
    return CanonicalBasis::canonicalize(layout, std::move(rows));
}

}  // namespace cls
