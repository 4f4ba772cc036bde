#include "flagcalc/linear_systems.hpp"

#include "flagcalc/errors.hpp"
#include "flagcalc/parallel.hpp"

#include <algorithm>
#include <limits>

namespace flagcalc {

std::int64_t h0_flag(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw PreconditionError("h0_flag needs a, b >= 0");
    return ((a + 1) * (a + 2) * (b + 1) * (b + 2) - a * (a + 1) * b * (b + 1)) / 4;
}

std::int64_t h0_hirzebruch(HirzebruchSide side, std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw PreconditionError("h0_hirzebruch needs a, b >= 0");
    if (side == HirzebruchSide::bidegree_10) return a * (b + 1) + (b + 2) * (b + 1) / 2;
    return b * (a + 1) + (a + 2) * (a + 1) / 2;
}

ConditionMatrix condition_matrix(unsigned a, unsigned b, const std::vector<Conic>& conics) {
    for (std::size_t i = 0; i < conics.size(); ++i) {
        if (!conics[i].smooth()) throw DegenerateConicError("condition_matrix: degenerate conic " + conics[i].to_string());
        for (std::size_t j = 0; j < i; ++j) {
            if (conics[i] == conics[j]) throw PreconditionError("condition_matrix: repeated conic " + conics[i].to_string());
        }
    }
    ConditionMatrix out;
    out.a = a;
    out.b = b;
    out.conics = conics;
    out.columns = BiForm::standard_monomials(a, b);
    const std::size_t per_conic = a + b + 1;
    out.rows.assign(conics.size() * per_conic, std::vector<GaussianRational>(out.columns.size()));

    parallel_for(conics.size(), [&](std::size_t i) {
        const FlagCurve param = conic_param(conics[i]);
        for (std::size_t c = 0; c < out.columns.size(); ++c) {
            const BinaryForm r = BiForm::monomial(out.columns[c]).substitute(param.p_forms(), param.l_forms());
            for (std::size_t k = 0; k < per_conic; ++k) out.rows[i * per_conic + k][c] = r[k];
        }
    });
    return out;
}

namespace {

struct Echelon {
    DenseMatrix<GaussianRational> rows;  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivot_columns;
};

Echelon reduce(DenseMatrix<GaussianRational> m, std::size_t columns) {
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t best = m.size();
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = row; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            const std::size_t sz = m[r][col].bit_size();
            if (sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best == m.size()) continue;
        std::swap(m[row], m[best]);
        const GaussianRational inv = m[row][col].inverse();
        for (std::size_t c = col; c < columns; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const GaussianRational factor = m[r][col];
            for (std::size_t c = col; c < columns; ++c) {
                if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(DenseMatrix<GaussianRational> m) {
    const std::size_t columns = m.empty() ? 0 : m.front().size();
    return reduce(std::move(m), columns).pivot_columns.size();
}

std::vector<std::vector<GaussianRational>> kernel_basis(DenseMatrix<GaussianRational> m, std::size_t columns) {
    const Echelon e = reduce(std::move(m), columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(columns);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::int64_t system_dimension(unsigned a, unsigned b, const std::vector<Conic>& conics) {
    const ConditionMatrix cm = condition_matrix(a, b, conics);
    return static_cast<std::int64_t>(cm.columns.size()) - static_cast<std::int64_t>(rank(cm.rows));
}

std::int64_t expected_dimension(unsigned a, unsigned b, std::size_t conic_count) {
    const std::int64_t value = h0_flag(a, b) - static_cast<std::int64_t>(conic_count) * (a + b + 1);
    return std::max<std::int64_t>(0, value);
}

SurfaceFamily surface_family(unsigned a, unsigned b, const std::vector<Conic>& conics) {
    const ConditionMatrix cm = condition_matrix(a, b, conics);
    SurfaceFamily family;
    family.a = a;
    family.b = b;
    family.prescribed = conics;
    for (const auto& v : kernel_basis(cm.rows, cm.columns.size())) {
        BiForm f(a, b);
        for (std::size_t c = 0; c < v.size(); ++c) f.add_term(cm.columns[c], v[c]);
        for (const auto& conic : conics) {
            if (!contains_conic(f, conic)) throw InternalError("kernel element misses conic " + conic.to_string());
        }
        family.basis.push_back(std::move(f));
    }
    return family;
}

BiForm surface_through_conics(unsigned a, unsigned b, const std::vector<Conic>& conics, std::uint64_t seed) {
    const SurfaceFamily family = surface_family(a, b, conics);
    if (family.basis.empty()) {
        throw EmptySystemError("no surface of bidegree (" + std::to_string(a) + "," + std::to_string(b) +
                               ") contains the prescribed conics");
    }
    Rng rng(seed);
    for (;;) {
        BiForm member(a, b);
        for (const auto& f : family.basis) member = member + f.scaled(rng.gaussian_integer(9));
        if (!member.is_zero()) return member;
    }
}

std::optional<SingularWitness> conic_singularity_witness(const BiForm& form, const Conic& conic) {
    if (form.a() + form.b() == 0) throw PreconditionError("singularity witness needs a nonconstant form");
    if (!contains_conic(form, conic)) throw PreconditionError("singularity witness: conic not on the surface");
    const FlagCurve param = conic_param(conic);
    const unsigned grad_degree = form.a() + form.b() - 1;

    std::array<BinaryForm, 6> grad;
    std::array<BinaryForm, 6> normal;  // gradient (l, p) of the incidence form
    for (std::size_t i = 0; i < 3; ++i) {
        grad[i] = form.a() == 0 ? BinaryForm(grad_degree)
                                : form.partial_p(i).substitute(param.p_forms(), param.l_forms());
        grad[3 + i] = form.b() == 0 ? BinaryForm(grad_degree)
                                    : form.partial_l(i).substitute(param.p_forms(), param.l_forms());
        normal[i] = param.l_forms()[i];
        normal[3 + i] = param.p_forms()[i];
    }

    std::optional<BinaryForm> g;
    for (std::size_t j = 0; j < 6; ++j) {
        for (std::size_t k = j + 1; k < 6; ++k) {
            const BinaryForm minor = grad[j] * normal[k] - grad[k] * normal[j];
            if (minor.is_zero()) continue;
            g = g ? gcd(*g, minor) : minor.normalized();
            if (g->degree() == 0) return std::nullopt;
        }
    }

    SingularWitness w;
    if (!g) {
        w.whole_conic = true;
        w.locus = BinaryForm(form.a() + form.b());
        w.point = param.at(1, 0);
        return w;
    }
    w.locus = *g;
    const BinaryForm& h = *g;
    if (h.degree() == 1) {
        w.point = param.at(h[1], -h[0]);
    } else if (h[0].is_zero()) {
        w.point = param.at(1, 0);
    } else if (h[h.degree()].is_zero()) {
        w.point = param.at(0, 1);
    }
    return w;
}

namespace {

ProjPoint random_point(Rng& rng, std::int64_t height) {
    for (;;) {
        Point3 x{rng.small_integer(height), rng.small_integer(height), rng.small_integer(height)};
        if (!is_zero(x)) return ProjPoint(x);
    }
}

}  // namespace

Conic random_smooth_conic(Rng& rng, std::int64_t height) {
    for (;;) {
        ProjPoint q = random_point(rng, height);
        ProjPoint m = random_point(rng, height);
        Conic c(std::move(q), std::move(m));
        if (c.smooth()) return c;
    }
}

Conic random_real_twistor_fiber(Rng& rng, std::int64_t height) {
    return twistor_fiber_of(random_point(rng, height));
}

std::vector<Conic> random_disjoint_conics(Rng& rng, std::size_t count, std::int64_t height) {
    std::vector<Conic> out;
    out.reserve(count);
    while (out.size() < count) {
        Conic c = random_smooth_conic(rng, height);
        const bool ok = std::all_of(out.begin(), out.end(),
                                    [&](const Conic& other) { return !(other == c) && conics_disjoint(other, c); });
        if (ok) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace flagcalc
