#pragma once

#include <hharm6/linalg.hpp>
#include <hharm6/moments.hpp>
#include <hharm6/ops.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hharm6 {

struct HarmonicLabel {
    int K = 0;
    int Q = 0;
    int L = 0;
    int m = 0;
    ExactCoeff nu; // real; irrational only through a single quadratic surd
    int parity = 1;

    bool operator==(const HarmonicLabel& o) const {
        return K == o.K && Q == o.Q && L == o.L && m == o.m && nu == o.nu;
    }

    std::string to_string() const {
        return "(K=" + std::to_string(K) + ",Q=" + std::to_string(Q) + ",L=" +
               std::to_string(L) + ",m=" + std::to_string(m) + ",nu=" + nu.to_string() + ")";
    }
};

/// Canonical catalog order: K, then Q descending, then L, then m, then nu descending.
inline bool label_less(const HarmonicLabel& a, const HarmonicLabel& b) {
    if (a.K != b.K) return a.K < b.K;
    if (a.Q != b.Q) return a.Q > b.Q;
    if (a.L != b.L) return a.L < b.L;
    if (a.m != b.m) return a.m < b.m;
    if (a.nu == b.nu) return false;
    return ExactCoeff::compare_real(a.nu, b.nu) > 0;
}

/// One catalog entry. The unit-normalized harmonic on the 5-sphere is
/// numerator / (sqrt(norm_sq_raw) R^K); norm_sq_raw = <numerator, numerator> stays a
/// rational multiple of pi^3, which keeps every coefficient inside one quadratic surd
/// even where the fully folded normalization would need nested radicals.
struct Harmonic {
    HarmonicLabel label;
    HomoPoly numerator;
    ExactCoeff norm_sq_raw;
};

struct Catalog {
    int k_max = 0;
    std::vector<Harmonic> entries;

    const Harmonic* find(const HarmonicLabel& l) const {
        for (const auto& h : entries)
            if (h.label == l) return &h;
        return nullptr;
    }
    const Harmonic* find(int K, int Q, int L, int m, const ExactCoeff& nu) const {
        return find(HarmonicLabel{K, Q, L, m, nu, (K % 2 == 0) ? 1 : -1});
    }

    std::size_t count_at(int K) const {
        std::size_t n = 0;
        for (const auto& h : entries) n += (h.label.K == K);
        return n;
    }
};

inline Int dim_harmonic_space(int K) {
    if (K < 0) return Int(0);
    Int all = binomial(K + 5, 5);
    Int lower = (K >= 2) ? binomial(K + 3, 5) : Int(0);
    return all - lower;
}

// ---- kernel of the Laplacian ----

namespace detail {

inline std::vector<HomoPoly> laplacian_kernel(const MonomialBasis& cols,
                                              const MonomialBasis& rows) {
    ExactMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        HomoPoly b(cols.degree());
        b.add_term(cols[j], ExactCoeff::from_int(1));
        for (const auto& [mono, c] : apply_laplacian(b).terms())
            m.at(rows.index_of(mono), j) = c;
    }
    std::vector<HomoPoly> out;
    for (const auto& v : kernel_basis(m)) out.push_back(cols.to_poly(v));
    return out;
}

} // namespace detail

/// Exact basis of harmonic (Laplacian-kernel) polynomials of degree K.
inline std::vector<HomoPoly> harmonic_subspace(int K) {
    if (K < 0) throw std::domain_error("harmonic_subspace: negative degree");
    if (K < 2) {
        MonomialBasis basis(K);
        std::vector<HomoPoly> out;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            HomoPoly p(K);
            p.add_term(basis[i], ExactCoeff::from_int(1));
            out.push_back(p);
        }
        return out;
    }
    return detail::laplacian_kernel(MonomialBasis(K), MonomialBasis(K - 2));
}

/// Same, restricted to one democracy grade Q.
inline std::vector<HomoPoly> harmonic_subspace_block(int K, int Q) {
    if ((K - Q) % 2 != 0 || Q < -K || Q > K) return {};
    MonomialBasis cols(K, Q);
    if (K < 2) {
        std::vector<HomoPoly> out;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            HomoPoly p(K);
            p.add_term(cols[i], ExactCoeff::from_int(1));
            out.push_back(p);
        }
        return out;
    }
    return detail::laplacian_kernel(cols, MonomialBasis(K - 2, Q));
}

// ---- restriction of operators to a polynomial span ----

class BlockSpan {
public:
    BlockSpan(std::vector<HomoPoly> polys, const MonomialBasis& space)
        : space_(space), polys_(std::move(polys)), solver_(vectorize(polys_, space_)) {}

    const std::vector<HomoPoly>& polys() const { return polys_; }
    std::size_t dimension() const { return polys_.size(); }

    ExactMatrix restrict_operator(const PolyOperator& op) const {
        ExactMatrix m(polys_.size(), polys_.size());
        for (std::size_t j = 0; j < polys_.size(); ++j) {
            auto coords = solver_.express(space_.to_vector(op(polys_[j])));
            if (!coords)
                throw std::domain_error("BlockSpan: operator image leaves the block span");
            for (std::size_t i = 0; i < polys_.size(); ++i) m.at(i, j) = (*coords)[i];
        }
        return m;
    }

    HomoPoly combine(const ExactVector& coords) const {
        HomoPoly r(polys_.empty() ? 0 : polys_[0].degree());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            r = r + polys_[i].scaled(coords[i]);
        }
        return r;
    }

    std::vector<HomoPoly> combine_all(const std::vector<ExactVector>& coord_vectors) const {
        std::vector<HomoPoly> out;
        for (const auto& v : coord_vectors) out.push_back(combine(v));
        return out;
    }

private:
    static std::vector<ExactVector> vectorize(const std::vector<HomoPoly>& polys,
                                              const MonomialBasis& space) {
        std::vector<ExactVector> vs;
        for (const auto& p : polys) vs.push_back(space.to_vector(p));
        return vs;
    }

    MonomialBasis space_;
    std::vector<HomoPoly> polys_;
    SpanSolver solver_;
};

namespace detail {

inline ExactMatrix shifted(const ExactMatrix& m, const ExactCoeff& lambda) {
    ExactMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) r.at(i, i) -= lambda;
    return r;
}

/// Eigenspace of an exactly known eigenvalue inside a block.
inline std::vector<HomoPoly> eigenspace(const BlockSpan& block, const ExactMatrix& m,
                                        const ExactCoeff& lambda) {
    return block.combine_all(kernel_basis(shifted(m, lambda)));
}

} // namespace detail

// ---- label splitting ----

struct LabelBlock {
    int K = 0, Q = 0, L = 0, m = 0;
    std::vector<HomoPoly> basis;
};

/// Splits a harmonic subspace basis into simultaneous eigenblocks of (Q, L^2, L_3).
/// Input polynomials may mix democracy grades; grade components are separated first
/// (each component is itself harmonic because the Laplacian preserves the grade).
inline std::vector<LabelBlock> split_by_labels(const std::vector<HomoPoly>& subspace, int K) {
    // decompose by Q and re-independentize
    std::map<int, std::vector<HomoPoly>> by_q;
    for (const auto& p : subspace) {
        std::map<int, HomoPoly> parts;
        for (const auto& [mono, c] : p.terms()) {
            auto [it, fresh] = parts.try_emplace(mono.q_grade(), HomoPoly(K));
            it->second.add_term(mono, c);
        }
        for (auto& [q, part] : parts) by_q[q].push_back(std::move(part));
    }
    std::vector<LabelBlock> out;
    for (auto& [q, polys] : by_q) {
        MonomialBasis space(K, q);
        // independent subset via echelon form
        ExactMatrix rows(polys.size(), space.size());
        for (std::size_t i = 0; i < polys.size(); ++i) {
            auto v = space.to_vector(polys[i]);
            for (std::size_t j = 0; j < v.size(); ++j) rows.at(i, j) = v[j];
        }
        auto pivots = rref_in_place(rows);
        std::vector<HomoPoly> indep;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            ExactVector v(space.size());
            for (std::size_t j = 0; j < space.size(); ++j) v[j] = rows.at(r, j);
            indep.push_back(space.to_poly(v));
        }
        if (indep.empty()) continue;

        BlockSpan qblock(indep, space);
        ExactMatrix lsq = qblock.restrict_operator([](const HomoPoly& p) { return apply_Lsq(p); });
        std::size_t accounted = 0;
        for (int L = K; L >= 0; --L) {
            auto lblock_polys =
                detail::eigenspace(qblock, lsq, ExactCoeff::from_int(L * (L + 1)));
            if (lblock_polys.empty()) continue;
            accounted += lblock_polys.size();
            BlockSpan lblock(lblock_polys, space);
            ExactMatrix l3 =
                lblock.restrict_operator([](const HomoPoly& p) { return apply_L3(p); });
            std::size_t m_accounted = 0;
            for (int m = L; m >= -L; --m) {
                auto mpolys = detail::eigenspace(lblock, l3, ExactCoeff::from_int(m));
                if (mpolys.empty()) continue;
                m_accounted += mpolys.size();
                out.push_back(LabelBlock{K, q, L, m, std::move(mpolys)});
            }
            if (m_accounted != lblock_polys.size())
                throw std::domain_error(
                    "split_by_labels: L3 spectrum is not the expected integer set");
        }
        if (accounted != indep.size())
            throw std::domain_error(
                "split_by_labels: L^2 spectrum is not the expected integer set");
    }
    std::sort(out.begin(), out.end(), [](const LabelBlock& a, const LabelBlock& b) {
        if (a.Q != b.Q) return a.Q > b.Q;
        if (a.L != b.L) return a.L < b.L;
        return a.m > b.m;
    });
    return out;
}

// ---- multiplicity resolution ----

/// Eigen-decomposition of the multiplicity operator V_LQL on a (K, Q, L, m) block.
/// Dimension 1 reads off its eigenvalue; dimension 2 solves the characteristic
/// quadratic exactly (eigenvalues a +- b sqrt(d)); larger blocks are first split by
/// integer eigenvalues and must end at dimension <= 2.
inline std::vector<std::pair<ExactCoeff, HomoPoly>> split_multiplicity(const LabelBlock& block) {
    if (block.basis.empty()) throw std::domain_error("split_multiplicity: empty block");
    MonomialBasis space(block.K, block.Q);
    BlockSpan span(block.basis, space);
    ExactMatrix v = span.restrict_operator([](const HomoPoly& p) { return apply_VLQL(p); });
    std::size_t n = span.dimension();

    std::vector<std::pair<ExactCoeff, HomoPoly>> out;
    auto take_eigenspace = [&](const ExactCoeff& nu) {
        for (auto& p : detail::eigenspace(span, v, nu)) out.emplace_back(nu, std::move(p));
    };

    if (n == 1) {
        ExactCoeff nu = v.at(0, 0);
        if (!nu.is_real()) throw std::domain_error("split_multiplicity: non-real eigenvalue");
        out.emplace_back(nu, block.basis[0]);
        return out;
    }
    if (n == 2) {
        ExactCoeff tr = v.at(0, 0) + v.at(1, 1);
        ExactCoeff det = v.at(0, 0) * v.at(1, 1) - v.at(0, 1) * v.at(1, 0);
        ExactCoeff disc = tr * tr - det * ExactCoeff::from_int(4);
        if (!disc.is_real() || disc.has_surd() || !tr.is_real())
            throw std::domain_error("split_multiplicity: characteristic data outside Q");
        if (disc.sign() < 0)
            throw std::domain_error("split_multiplicity: negative discriminant");
        ExactCoeff root = disc.is_zero() ? ExactCoeff()
                                         : ExactCoeff::sqrt_rational(disc.re_a());
        ExactCoeff half = ExactCoeff::from_rational(Rat(1, 2));
        for (const ExactCoeff& nu : {(tr + root) * half, (tr - root) * half}) {
            take_eigenspace(nu);
            if (disc.is_zero()) break;
        }
        if (out.size() != 2)
            throw std::domain_error("split_multiplicity: 2x2 block did not split cleanly");
        return out;
    }

    // n >= 3: peel off integer eigenvalues, then the remainder must be 2-dimensional.
    std::vector<ExactCoeff> found;
    // integer candidates: divisors of the constant term of the characteristic polynomial
    // are a superset; scanning a modest window is sufficient at catalog scales.
    for (int cand = -(int)(4 * n * n + 40); cand <= (int)(4 * n * n + 40) && out.size() < n;
         ++cand) {
        ExactCoeff nu = ExactCoeff::from_int(cand);
        auto vecs = detail::eigenspace(span, v, nu);
        if (vecs.empty()) continue;
        found.push_back(nu);
        for (auto& p : vecs) out.emplace_back(nu, std::move(p));
    }
    if (out.size() == n) return out;
    if (n - out.size() == 2) {
        // residual invariant plane: image of prod (V - nu_i)
        ExactMatrix prod = ExactMatrix::identity(n);
        for (const auto& nu : found) prod = prod * detail::shifted(v, nu);
        ExactMatrix cols = prod.transposed();
        auto pivots = rref_in_place(cols);
        std::vector<HomoPoly> residual;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            ExactVector coords(n);
            for (std::size_t j = 0; j < n; ++j) coords[j] = cols.at(r, j);
            residual.push_back(span.combine(coords));
        }
        if (residual.size() != 2)
            throw std::domain_error("split_multiplicity: residual block has unexpected rank");
        LabelBlock rest{block.K, block.Q, block.L, block.m, residual};
        for (auto& pr : split_multiplicity(rest)) out.push_back(std::move(pr));
        return out;
    }
    throw std::domain_error(
        "split_multiplicity: block of dimension " + std::to_string(n) +
        " has irrational structure beyond a single quadratic; refusing to approximate");
}

// ---- normalization and phase ----

namespace detail {

inline bool rat_is_square(const Rat& r, Rat& root) {
    if (r < 0) return false;
    Int n, d;
    if (!is_perfect_square(rat_num(r), n)) return false;
    if (!is_perfect_square(rat_den(r), d)) return false;
    root = Rat(n, d);
    return true;
}

/// Rescales p so that <p, p> is a rational multiple of pi^3 when possible.
/// Returns the applied real scale factor.
inline ExactCoeff rationalize_norm(HomoPoly& p, ExactCoeff& norm) {
    if (!norm.has_surd()) return ExactCoeff::from_int(1);
    const Rat u = norm.re_a();
    const Rat vq = norm.re_b();
    const Int d = norm.surd();
    Rat t;
    if (!rat_is_square(u * u - vq * vq * Rat(d), t))
        return ExactCoeff::from_int(1); // representable but not rationalizable; keep as-is
    for (const Rat& r : {(-u + t) / vq, (-u - t) / vq}) {
        ExactCoeff s = ExactCoeff::make(r, Rat(1), Rat(0), Rat(0), d, 0);
        if (s.is_zero()) continue;
        ExactCoeff new_norm = s * s * norm;
        if (new_norm.has_surd()) continue;
        p = p.scaled(s);
        norm = new_norm;
        return s;
    }
    return ExactCoeff::from_int(1);
}

/// Divides out the rational content so coefficient components are coprime integers,
/// keeping the leading coefficient sign.
inline void reduce_content(HomoPoly& p, ExactCoeff& norm) {
    Int g(0), l(1);
    for (const auto& [m, c] : p.terms()) {
        for (const Rat* r : {&c.re_a(), &c.re_b(), &c.im_a(), &c.im_b()}) {
            if (*r == 0) continue;
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(rat_num(*r)));
            l = boost::multiprecision::lcm(l, rat_den(*r));
        }
    }
    if (g == 0) return;
    Rat scale(l, g);
    if (scale == 1) return;
    ExactCoeff s = ExactCoeff::from_rational(scale);
    p = p.scaled(s);
    norm = norm * s * s;
}

} // namespace detail

/// Canonical scaling and phase: the leading (graded-lex greatest) coefficient is made
/// real and positive, the raw norm is made rational whenever a single-surd rescaling
/// can do it, and the rational content is reduced. Returns the finished entry.
inline Harmonic normalize_and_phase(const HarmonicLabel& label, const HomoPoly& eigenvector) {
    if (eigenvector.is_zero()) throw std::domain_error("normalize_and_phase: zero vector");
    HomoPoly p = eigenvector;
    // unit leading coefficient fixes the phase (and any complex scale)
    p = p.scaled(p.leading().second.inverse());
    ExactCoeff norm = inner_product(p, p);
    detail::rationalize_norm(p, norm);
    if (p.leading().second.sign() < 0) {
        p = -p;
        // norm unchanged
    }
    detail::reduce_content(p, norm);
    if (!norm.is_real() || norm.sign() <= 0)
        throw std::domain_error("normalize_and_phase: norm is not positive definite");
    return Harmonic{label, std::move(p), norm};
}

// ---- catalog construction ----

struct BuildOptions {
    int k_max_limit = 8;
    /// Reference representatives (Q >= 0, m = L); when a label matches with unit
    /// overlap the reference representation is adopted verbatim.
    std::vector<Harmonic> phase_refs;
    bool throw_on_ref_mismatch = true;
};

struct RefMatch {
    HarmonicLabel label;
    bool matched = false; // unit overlap, representation adopted
};

namespace detail {

inline const Harmonic* find_ref(const std::vector<Harmonic>& refs, const HarmonicLabel& l) {
    for (const auto& r : refs)
        if (r.label == l) return &r;
    return nullptr;
}

/// |<a, b>|^2 == <a,a> <b,b> exactly, i.e. the two states are parallel.
inline bool unit_overlap(const Harmonic& a, const Harmonic& b) {
    ExactCoeff ov = inner_product(a.numerator, b.numerator);
    return ov * ov.conj() == a.norm_sq_raw * b.norm_sq_raw;
}

} // namespace detail

inline Catalog build_catalog(int k_max, const BuildOptions& options = {}) {
    if (k_max < 0) throw std::domain_error("build_catalog: negative k_max");
    if (k_max > options.k_max_limit)
        throw std::domain_error("build_catalog: k_max " + std::to_string(k_max) +
                                " exceeds the configured limit " +
                                std::to_string(options.k_max_limit));
    Catalog cat;
    cat.k_max = k_max;
    std::vector<RefMatch> ref_matches;

    for (int K = 0; K <= k_max; ++K) {
        const int parity = (K % 2 == 0) ? 1 : -1;
        Int accounted(0);
        for (int Q = K; Q >= 0; Q -= 2) {
            auto kernel = harmonic_subspace_block(K, Q);
            if (kernel.empty()) continue;
            auto blocks = split_by_labels(kernel, K);
            for (const auto& block : blocks) {
                if (block.m != block.L) continue; // highest-weight states only; rest by ladder
                auto eigens = split_multiplicity(block);
                for (auto& [nu, vec] : eigens) {
                    accounted += Int(2 * block.L + 1) * (Q > 0 ? 2 : 1);
                    if (Q == 0 && !nu.is_zero() && nu.sign() < 0)
                        continue; // produced from the +nu partner by reflection
                    HarmonicLabel top{K, Q, block.L, block.L, nu, parity};
                    Harmonic h = normalize_and_phase(top, vec);
                    if (const Harmonic* ref = detail::find_ref(options.phase_refs, top)) {
                        if (detail::unit_overlap(h, *ref)) {
                            h = *ref;
                            ref_matches.push_back({top, true});
                        } else if (options.throw_on_ref_mismatch) {
                            throw std::domain_error(
                                "build_catalog: reference state at " + top.to_string() +
                                " is not parallel to the built eigenvector");
                        } else {
                            ref_matches.push_back({top, false});
                        }
                    }
                    // m chain by exact lowering, mirrored chain by rho reflection
                    const int refl_sign = ((K - block.L) % 2 == 0) ? 1 : -1;
                    HomoPoly cur = h.numerator;
                    ExactCoeff cur_norm = h.norm_sq_raw;
                    for (int m = block.L; m >= -block.L; --m) {
                        Harmonic entry{HarmonicLabel{K, Q, block.L, m, nu, parity}, cur,
                                       cur_norm};
                        bool mirror = (Q > 0) || (Q == 0 && !nu.is_zero());
                        if (mirror) {
                            HomoPoly refl = cur.rho_reflected();
                            if (refl_sign < 0) refl = -refl;
                            cat.entries.push_back(
                                Harmonic{HarmonicLabel{K, -Q, block.L, m, -nu, parity},
                                         std::move(refl), cur_norm});
                        }
                        cat.entries.push_back(std::move(entry));
                        if (m > -block.L) {
                            ExactCoeff factor =
                                ExactCoeff::from_int(block.L * (block.L + 1) - m * (m - 1));
                            cur = apply_ladder(cur, LadderDirection::lower);
                            cur_norm = cur_norm * factor;
                        }
                    }
                }
            }
        }
        if (accounted != dim_harmonic_space(K))
            throw std::domain_error("build_catalog: completeness failure at K = " +
                                    std::to_string(K) + ": found " + accounted.str() +
                                    " of " + dim_harmonic_space(K).str());
    }

    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const Harmonic& a, const Harmonic& b) { return label_less(a.label, b.label); });
    for (std::size_t i = 1; i < cat.entries.size(); ++i)
        if (cat.entries[i].label == cat.entries[i - 1].label)
            throw std::domain_error("build_catalog: duplicate label " +
                                    cat.entries[i].label.to_string());
    return cat;
}

// ---- per-entry exactness checks ----

struct EigenCheck {
    bool laplacian_zero = false;
    bool q_ok = false;
    bool lsq_ok = false;
    bool l3_ok = false;
    bool v_ok = false;
    bool norm_ok = false;
    bool all() const { return laplacian_zero && q_ok && lsq_ok && l3_ok && v_ok && norm_ok; }
};

inline EigenCheck check_harmonic(const Harmonic& h) {
    EigenCheck c;
    const HomoPoly& p = h.numerator;
    c.laplacian_zero = apply_laplacian(p).is_zero();
    c.q_ok = apply_Q_trace(p) == p.scaled(ExactCoeff::from_int(h.label.Q));
    c.lsq_ok = apply_Lsq(p) == p.scaled(ExactCoeff::from_int(h.label.L * (h.label.L + 1)));
    c.l3_ok = apply_L3(p) == p.scaled(ExactCoeff::from_int(h.label.m));
    c.v_ok = apply_VLQL(p) == p.scaled(h.label.nu);
    c.norm_ok = inner_product(p, p) == h.norm_sq_raw;
    return c;
}

} // namespace hharm6
