#include <algorithm>
#include <random>

#include "check_registry.hpp"
#include "qcap/qdiff.hpp"
#include "qcap/theta.hpp"

namespace qcap::verify::detail {

namespace {

Monomial qpow(int e) {
    return Monomial::make(1, 0, e);
}

std::string cfg_tag(const GapConfig& c) {
    return "(alpha=" + std::to_string(c.alpha) + ",beta=" + std::to_string(c.beta) + ")";
}

// ---- partition-level checks ------------------------------------------------

void check_gap_equivalence(const Ctx& ctx) {
    for (int n = 0; n <= ctx.order; ++n) {
        enumerate_partitions(n, std::nullopt, [&](const Partition& p) {
            bool gap = is_level3_gap(p);
            bool mult = is_level3_multiplicity(p);
            ctx.require("gap vs multiplicity formulation, n=" + std::to_string(n), gap == mult,
                        Discrepancy{n, 0, BigInt(gap ? 1 : 0), BigInt(mult ? 1 : 0)});
        });
    }
}

void check_c2_d1(const Ctx& ctx) {
    for (int n = 0; n <= ctx.order; ++n)
        ctx.equal_count("c_2(n) = d_1(n)", n, count_cm(2, n), count_dj(1, n));
}

void check_c2star_d2(const Ctx& ctx) {
    for (int n = 0; n <= ctx.order; ++n) {
        ctx.equal_count("c*_2(n) = d_2(n)", n, count_c2star(n), count_dj(2, n));
        GapCounts g = gap_counts(n);
        ctx.equal_count("c*_2(n) = c_1(n) - c_2(n) + c_3(n)", n, g.c2star, g.c1 - g.c2 + g.c3);
        // larger minimum part counts a subset
        ctx.require("c_3(n) <= c_2(n) <= c_1(n)", g.c3 <= g.c2 && g.c2 <= g.c1,
                    Discrepancy{n, 0, BigInt(g.c3), BigInt(g.c1)});
    }
}

// ---- product identities ----------------------------------------------------

QSeries capparelli_product(std::initializer_list<int> exps, int order) {
    QSeries r = QSeries::one(order);
    for (int e : exps) r = r * pochhammer_infinite(Monomial{-1, 0, e}, 6, order);
    return r;
}

void check_product_c2(const Ctx& ctx) {
    QSeries counts = brute_force_series(kConfigC2, std::nullopt, ctx.order).at_t1();
    ctx.equal("sum c_2(n) q^n = (-q^2,-q^3,-q^4,-q^6;q^6)_inf", counts,
              capparelli_product({2, 3, 4, 6}, ctx.order));
}

void check_product_c2star(const Ctx& ctx) {
    QSeries lhs = brute_force_series(kConfigC2Star, std::nullopt, ctx.order);
    ctx.equal("sum c*_2(n) q^n = (-q,-q^3,-q^5,-q^6;q^6)_inf", lhs.at_t1(),
              capparelli_product({1, 3, 5, 6}, ctx.order));
    QSeries combo = brute_force_series(kConfigC1, std::nullopt, ctx.order) -
                    brute_force_series(kConfigC2, std::nullopt, ctx.order) +
                    brute_force_series(kConfigC3, std::nullopt, ctx.order);
    ctx.equal("C*_2(t;q) = C_1 - C_2 + C_3", lhs, combo);
}

void check_refined_c2(const Ctx& ctx) {
    QSeries lhs = brute_force_series(kConfigC2, std::nullopt, ctx.order);
    QSeries rhs = theta_sum(ThetaSpec{Monomial{1, 1, 4}, 6}, ctx.order) *
                  pochhammer_infinite(qpow(3), 3, ctx.order).inverse();
    ctx.equal("C_2(t;q) = theta(t q^4; q^6) / (q^3;q^3)_inf", lhs, rhs);
}

void check_refined_c2star(const Ctx& ctx) {
    QSeries lhs = brute_force_series(kConfigC2Star, std::nullopt, ctx.order);
    QSeries rhs = theta_sum(ThetaSpec{Monomial{1, 1, 1}, 6}, ctx.order) *
                  pochhammer_infinite(qpow(3), 3, ctx.order).inverse();
    ctx.equal("C*_2(t;q) = theta(t q; q^6) / (q^3;q^3)_inf", lhs, rhs);
    QSeries combo = brute_force_series(kConfigC1, std::nullopt, ctx.order) -
                    brute_force_series(kConfigC2, std::nullopt, ctx.order) +
                    brute_force_series(kConfigC3, std::nullopt, ctx.order);
    ctx.equal("C*_2(t;q) = C_1 - C_2 + C_3", lhs, combo);
}

// ---- classical hypergeometric suite ----------------------------------------

void check_jtp(const Ctx& ctx) {
    auto check_spec = [&](const ThetaSpec& spec, const std::string& tag) {
        ctx.equal("theta sum = triple product, " + tag, theta_sum(spec, ctx.order),
                  theta_product(spec, ctx.order));
    };
    check_spec(ThetaSpec{Monomial{1, 1, 4}, 6}, "z=tq^4 mod 6");
    check_spec(ThetaSpec{Monomial{-1, 2, 2}, 6}, "z=-t^2q^2 mod 6");
    check_spec(ThetaSpec{Monomial{1, 1, 1}, 6}, "z=tq mod 6");
    check_spec(ThetaSpec{Monomial{1, 0, 1}, 2}, "z=q mod 2");

    std::mt19937 rng(0xC0FFEE);
    for (int i = 0; i < 20; ++i) {
        int modulus = 1 + static_cast<int>(rng() % 6);
        int q_exp = 1 + static_cast<int>(rng() % static_cast<unsigned>(modulus));
        int t_exp = static_cast<int>(rng() % 5) - 2;
        int sign = rng() % 2 ? 1 : -1;
        ThetaSpec spec{Monomial{sign, t_exp, q_exp}, modulus};
        check_spec(spec, "random #" + std::to_string(i) + " z=" + spec.z.str() + " mod " +
                             std::to_string(modulus));
    }
}

void check_euler1(const Ctx& ctx) {
    auto both = [&](const Monomial& x, int modulus, const std::string& tag) {
        auto [lhs, rhs] = euler_sides(1, x, modulus, ctx.order);
        ctx.equal("1/(x;q)_inf expansion, " + tag, lhs, rhs);
    };
    both(qpow(1), 1, "x=q");
    both(qpow(3), 3, "x=q^3 base q^3");
    both(Monomial{1, 1, 2}, 3, "x=tq^2 base q^3");
    both(Monomial{-1, -1, 1}, 2, "x=-t^-1 q base q^2");
    both(Monomial{2, 0, 1}, 1, "x=2q");

    // x = q counts all partitions; cross-check against the enumerator.
    int small = std::min(ctx.order, 24);
    auto [lhs, rhs] = euler_sides(1, qpow(1), 1, small);
    QSeries counted(0, small);
    for (int n = 0; n < small; ++n) {
        long long c = 0;
        enumerate_partitions(n, std::nullopt, [&](const Partition&) { ++c; });
        counted.add_term(n, 0, BigInt(c));
    }
    ctx.equal("1/(q;q)_inf counts partitions", lhs, counted);
}

void check_euler2(const Ctx& ctx) {
    auto both = [&](const Monomial& x, int modulus, const std::string& tag) {
        auto [lhs, rhs] = euler_sides(2, x, modulus, ctx.order);
        ctx.equal("(x;q)_inf expansion, " + tag, lhs, rhs);
    };
    both(Monomial{1, 1, 3}, 3, "x=tq^3 base q^3");
    both(qpow(1), 1, "x=q");
    both(Monomial{-1, 2, 2}, 6, "x=-t^2q^2 base q^6");
    both(Monomial{-2, -1, 1}, 2, "x=-2t^-1 q base q^2");
}

void check_cauchy_even(const Ctx& ctx) {
    for (int modulus : {1, 3}) {
        auto sides = cauchy_even_sides(modulus, ctx.order);
        std::string tag = "base q^" + std::to_string(modulus);
        ctx.equal("even-index sum = 1/(q;q^2)_inf, " + tag, sides.even_sum, sides.inverse_product);
        ctx.equal("even-index sum = (-q;q)_inf, " + tag, sides.even_sum, sides.neg_pochhammer);
    }
}

void check_ramanujan(const Ctx& ctx) {
    auto both = [&](const Monomial& a, const Monomial& b, const std::string& tag) {
        auto [lhs, rhs] = ramanujan_sides(a, b, 6, ctx.order);
        // The left side lives at q-exponents >= 0, so the transformed
        // side must cancel exactly below that.
        if (rhs.lo() < 0)
            ctx.zero("transformed side vanishes below q^0, " + tag,
                     rhs.rewindowed(rhs.lo(), 0));
        ctx.equal("lost-notebook transform, " + tag, lhs, rhs);
    };
    both(Monomial{1, 1, 4}, Monomial{1, -1, 2}, "a=tq^4, b=t^-1q^2");
    both(Monomial{1, -1, -1}, Monomial{1, 1, 1}, "a=t^-1q^-1, b=tq");

    std::mt19937 rng(0xBEEF);
    for (int i = 0; i < 10; ++i) {
        int aq = static_cast<int>(rng() % 9) - 3; // >= -3 keeps -aq^6 positive
        int bq = static_cast<int>(rng() % 9) - 3;
        int at = static_cast<int>(rng() % 5) - 2;
        int bt = static_cast<int>(rng() % 5) - 2;
        int asign = rng() % 2 ? 1 : -1;
        int bcoeff = (rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 2));
        Monomial a{asign, at, aq};
        Monomial b{bcoeff, bt, bq};
        both(a, b, "random #" + std::to_string(i) + " a=" + a.str() + " b=" + b.str());
    }
}

void check_rogers(const Ctx& ctx) {
    auto both = [&](const Monomial& y, const std::string& tag) {
        auto [lhs, rhs] = rogers_sides(y, 6, ctx.order);
        ctx.equal("rogers transform, " + tag, lhs, rhs);
    };
    both(Monomial{-1, -1, -4}, "y=-t^-1q^-4");
    both(Monomial{-1, 1, 1}, "y=-tq");

    std::mt19937 rng(0xFACE);
    for (int i = 0; i < 10; ++i) {
        int yq = static_cast<int>(rng() % 9) - 4; // yq^6 keeps positive exponent
        int yt = static_cast<int>(rng() % 5) - 2;
        int sign = rng() % 2 ? 1 : -1;
        Monomial y{sign, yt, yq};
        both(y, "random #" + std::to_string(i) + " y=" + y.str());
    }
}

// ---- finite recurrences ------------------------------------------------------

void check_recurrence_cnrec(const Ctx& ctx) {
    const int m_max = 30;
    for (const GapConfig& cfg : ctx.configs()) {
        FiniteCTable tbl(cfg, m_max, ctx.order);
        ctx.equal("C_{-2} = beta " + cfg_tag(cfg), tbl.at(-2),
                  QSeries::constant(cfg.beta, ctx.order));
        for (int m = 0; m <= m_max; ++m)
            ctx.equal("C_M matches enumeration, M=" + std::to_string(m) + " " + cfg_tag(cfg),
                      tbl.at(m), brute_force_series(cfg, m, ctx.order));
    }
}

void check_recurrence_combined(const Ctx& ctx) {
    for (const GapConfig& cfg : ctx.configs())
        for (int n = 2; n <= 10; ++n) {
            auto diff = combined_recurrence_diff(cfg, n, ctx.order);
            ctx.require("combined recurrence, n=" + std::to_string(n) + " " + cfg_tag(cfg), !diff,
                        diff.value_or(Discrepancy{}));
        }
}

void check_gamma_rec(const Ctx& ctx) {
    const int n_max = 12;
    for (const GapConfig& cfg : ctx.configs()) {
        auto gamma = gamma_seq(cfg, n_max, ctx.order);
        FiniteCTable tbl(cfg, 3 * n_max - 2, ctx.order);
        for (int n = 0; n <= n_max; ++n) {
            QSeries recovered = gamma[static_cast<std::size_t>(n)] *
                                pochhammer_finite(qpow(3), 3, n, ctx.order);
            ctx.equal("gamma_n (q^3;q^3)_n = C_{3n-2}, n=" + std::to_string(n) + " " + cfg_tag(cfg),
                      recovered, tbl.at(3 * n - 2 >= 0 ? 3 * n - 2 : -2));
        }
    }
}

void check_delta_rec_vs_closed(const Ctx& ctx) {
    const int n_max = 16;
    for (const GapConfig& cfg : ctx.configs()) {
        auto delta = delta_seq(cfg, n_max, ctx.order);
        for (int k = 0; k <= n_max; ++k)
            ctx.equal("delta_k recurrence vs closed form, k=" + std::to_string(k) + " " +
                          cfg_tag(cfg),
                      delta[static_cast<std::size_t>(k)], delta_closed(cfg, k, ctx.order));
    }
}

void check_fqdiff(const Ctx& ctx) {
    for (const GapConfig& cfg : ctx.configs()) {
        ZPoly res = qdiff_residual(QDiffEquation::F, cfg, ctx.z_degree, ctx.order);
        for (int d = 0; d <= ctx.z_degree - 2; ++d)
            ctx.zero("F-equation residual, z^" + std::to_string(d) + " " + cfg_tag(cfg),
                     res.coeff(d));
    }
}

void check_hqdiff(const Ctx& ctx) {
    for (const GapConfig& cfg : ctx.configs()) {
        auto [f, h] = build_F_H(cfg, ctx.z_degree, ctx.order);
        ZPoly prod = neg_z_pochhammer(ctx.z_degree, ctx.order).multiplied(h);
        for (int d = 0; d <= ctx.z_degree; ++d)
            ctx.equal("F = (-z;q^3)_inf H, z^" + std::to_string(d) + " " + cfg_tag(cfg),
                      f.coeff(d), prod.coeff(d));
        ZPoly res = qdiff_residual(QDiffEquation::H, cfg, ctx.z_degree, ctx.order);
        for (int d = 0; d <= ctx.z_degree - 2; ++d)
            ctx.zero("H-equation residual, z^" + std::to_string(d) + " " + cfg_tag(cfg),
                     res.coeff(d));
    }
}

void check_lemma_finite(const Ctx& ctx) {
    for (const GapConfig& cfg : ctx.configs())
        for (int n = 0; n <= 10; ++n) {
            QSeries lemma = lemma_eval(cfg, n, ctx.order);
            QSeries rec = finite_C(cfg, std::max(3 * n - 2, -2), ctx.order);
            ctx.equal("finite evaluation = recurrence, n=" + std::to_string(n) + " " + cfg_tag(cfg),
                      lemma, rec);
            if (3 * n - 2 >= 0)
                ctx.equal("finite evaluation = enumeration, n=" + std::to_string(n) + " " +
                              cfg_tag(cfg),
                          lemma, brute_force_series(cfg, 3 * n - 2, ctx.order));
        }
}

// ---- limits and the main evaluations ----------------------------------------

void check_limit_c0(const Ctx& ctx) {
    // The limiting step replaces q-binomials by 1/(q;q)_m.
    for (int m = 0; m <= 6; ++m) {
        int n = ctx.order / 3 + m + 1;
        ctx.equal("qbinomial limit, m=" + std::to_string(m),
                  qbinomial(n, m, 3, ctx.order),
                  pochhammer_finite(qpow(3), 3, m, ctx.order).inverse());
    }
    for (const GapConfig& cfg : ctx.configs()) {
        LimitChain chain = limit_chain(cfg, ctx.order);
        ctx.equal("ell-sum transform " + cfg_tag(cfg), chain.s0_direct, chain.s0_transformed);
        ctx.equal("rogers step " + cfg_tag(cfg), chain.rog0_lhs, chain.rog0_rhs);
        ctx.equal("C0 raw = C0 final " + cfg_tag(cfg), chain.c0_raw, chain.c0_final);
    }
}

void check_limit_c1(const Ctx& ctx) {
    for (const GapConfig& cfg : ctx.configs()) {
        LimitChain chain = limit_chain(cfg, ctx.order);
        ctx.equal("ell-sum transform " + cfg_tag(cfg), chain.s1_direct, chain.s1_transformed);
        ctx.equal("rogers step " + cfg_tag(cfg), chain.rog1_lhs, chain.rog1_rhs);
        ctx.equal("C1 raw = C1 final " + cfg_tag(cfg), chain.c1_raw, chain.c1_final);
        ctx.equal("1-beta fold into FT2 " + cfg_tag(cfg), chain.fold_lhs, chain.fold_rhs);
    }
}

void check_theorem_mainab(const Ctx& ctx) {
    for (const GapConfig& cfg : ctx.configs()) {
        LimitChain chain = limit_chain(cfg, ctx.order);
        ctx.equal("C0 + C1 assembles the evaluation " + cfg_tag(cfg),
                  chain.c0_final + chain.c1_final, chain.theorem_rhs);
        ctx.equal("enumeration matches the evaluation " + cfg_tag(cfg),
                  brute_force_series(cfg, std::nullopt, ctx.order), chain.theorem_rhs);
    }
}

void check_theorem_main(const Ctx& ctx) {
    const int N = ctx.order;
    static const int chi_expected[9] = {1, -1, 0, 1, -1, 0, 1, -1, 0};
    for (int k = 0; k < 9; ++k)
        ctx.equal_count("chi3 period", k, chi3(k), chi_expected[k]);

    QSeries negq3 = pochhammer_infinite(Monomial{-1, 0, 3}, 3, N);
    QSeries inv_q3 = pochhammer_infinite(qpow(3), 3, N).inverse();
    QSeries jacobi = negq3 * theta_sum(ThetaSpec{Monomial{-1, 2, 2}, 6}, N);
    QSeries r2 = theta_sum(ThetaSpec{Monomial{1, 1, 4}, 6}, N) * inv_q3;
    QSeries r2star = theta_sum(ThetaSpec{Monomial{1, 1, 1}, 6}, N) * inv_q3;
    QSeries ft1 = false_theta(1, FalseThetaForm::character, N);
    QSeries ft2 = false_theta(2, FalseThetaForm::character, N);
    QSeries one = QSeries::one(N);

    ctx.equal("C_1 line",
              brute_force_series(kConfigC1, std::nullopt, N),
              jacobi + r2 * (one - ft1) + r2star * (one - ft2));
    ctx.equal("C_3 line",
              brute_force_series(kConfigC3, std::nullopt, N),
              -jacobi + r2 * ft1 + r2star * ft2);
}

// ---- structural identities ---------------------------------------------------

void check_false_theta_forms(const Ctx& ctx) {
    for (int which : {1, 2}) {
        QSeries character = false_theta(which, FalseThetaForm::character, ctx.order);
        QSeries split = false_theta(which, FalseThetaForm::split, ctx.order);
        ctx.equal("character form = split form, FT" + std::to_string(which), character, split);

        // One-sided sums have ~sqrt(N) terms inside a window of size N.
        long long terms = 0;
        split.for_each_term([&](int, int, const BigInt&) { ++terms; });
        long long root = 1;
        while ((root + 1) * (root + 1) <= ctx.order) ++root;
        ctx.require("term count is Theta(sqrt(N)), FT" + std::to_string(which),
                    terms >= root / 2 && terms <= 3 * root + 3,
                    Discrepancy{static_cast<int>(terms), 0, BigInt(terms), BigInt(root)});
    }
}

void check_theta_assembly(const Ctx& ctx) {
    // sum_{k in Z} (-1)^k t^(-2k) q^(3k^2+k) built directly, against the
    // bilateral theta constructor at z = -t^2 q^2, base q^6.
    QSeries direct(0, ctx.order);
    auto emit = [&](long long k, long long e) {
        direct = direct + QSeries::monomial(
                              Monomial{k % 2 ? -1 : 1, static_cast<int>(-2 * k), static_cast<int>(e)},
                              ctx.order);
    };
    for (long long k = 0;; ++k) {
        long long e = 3 * k * k + k;
        if (e >= ctx.order) break;
        emit(k, e);
    }
    for (long long k = -1;; --k) {
        long long e = 3 * k * k + k;
        if (e >= ctx.order) break;
        emit(k, e);
    }
    ctx.equal("bilateral assembly", direct,
              theta_sum(ThetaSpec{Monomial{-1, 2, 2}, 6}, ctx.order));
}

void check_reindexing(const Ctx& ctx) {
    // sum_{k>=0} (-1)^k t^(2k+2) q^(3k^2+5k+2) = -sum_{k<=-1} (-1)^k t^(-2k) q^(3k^2+k)
    QSeries lhs(0, ctx.order);
    for (long long k = 0;; ++k) {
        long long e = 3 * k * k + 5 * k + 2;
        if (e >= ctx.order) break;
        lhs = lhs + QSeries::monomial(
                        Monomial{k % 2 ? -1 : 1, static_cast<int>(2 * k + 2), static_cast<int>(e)},
                        ctx.order);
    }
    QSeries rhs(0, ctx.order);
    for (long long k = -1;; --k) {
        long long e = 3 * k * k + k;
        if (e >= ctx.order) break;
        rhs = rhs + QSeries::monomial(
                        Monomial{k % 2 ? 1 : -1, static_cast<int>(-2 * k), static_cast<int>(e)},
                        ctx.order);
    }
    ctx.equal("reindexing", lhs, rhs);
}

// ---- registry ----------------------------------------------------------------

CheckDef def(std::string name, std::string label, std::string description,
             std::vector<std::string> covers, int default_order, void (*run)(const Ctx&),
             bool needs_z = false) {
    return CheckDef{CheckInfo{std::move(name), std::move(label), std::move(description),
                              std::move(covers)},
                    default_order, needs_z, run};
}

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;
    defs.push_back(def("capparelli-c2-d1", "Capparelli: c_2(n) = d_1(n)",
                       "gap-condition counts vs distinct parts avoiding +-1 mod 6",
                       {"c2-eq-d1"}, 60, check_c2_d1));
    defs.push_back(def("capparelli-c2star-d2", "Capparelli: c*_2(n) = d_2(n)",
                       "no-part-2 counts vs distinct parts avoiding +-2 mod 6, plus the "
                       "c*_2 = c_1 - c_2 + c_3 combination",
                       {"c2star-eq-d2", "c2star-count-combination"}, 60, check_c2star_d2));
    defs.push_back(def("cauchy-even", "even-index sum = 1/(q;q^2)_inf = (-q;q)_inf",
                       "the even-index specialization of Cauchy's identity, at base q and q^3",
                       {"cauchy-even-index"}, 100, check_cauchy_even));
    defs.push_back(def("delta-rec-vs-closed", "delta_n recurrence = closed forms",
                       "two-step recurrence vs the even/odd closed product forms, n <= 16",
                       {"delta-recurrence", "delta-even-closed", "delta-odd-closed"}, 40,
                       check_delta_rec_vs_closed));
    defs.push_back(def("euler1", "1/(x;q)_inf = sum x^n/(q;q)_n",
                       "Euler's inverse-product expansion at fixed and generic monomials",
                       {"euler-inverse-expansion"}, 100, check_euler1));
    defs.push_back(def("euler2", "(x;q)_inf = sum (-1)^n x^n q^(n(n-1)/2)/(q;q)_n",
                       "Euler's product expansion at fixed and generic monomials",
                       {"euler-product-expansion"}, 100, check_euler2));
    defs.push_back(def("false-theta-forms", "FT1/FT2 character form = split form",
                       "period-3 character sums vs their one-sided split rewriting",
                       {"false-theta-split-forms"}, 200, check_false_theta_forms));
    defs.push_back(def("fqdiff-residual", "q-difference equation for F(z)",
                       "residual of the three-term functional equation for F, z-degrees 0..D-2",
                       {"f-generating-function", "f-qdifference"}, 40, check_fqdiff, true));
    defs.push_back(def("gamma-rec", "gamma_n (q^3;q^3)_n = C_{3n-2}",
                       "renormalized sequence from the three-term recurrence vs finite C, n <= 12",
                       {"gamma-definition", "gamma-recurrence", "gamma-initials"}, 40,
                       check_gamma_rec));
    defs.push_back(def("gap-equivalence", "gap condition = multiplicity inequalities",
                       "both formulations agree on every partition of every n up to the order",
                       {"gap-multiplicity-equivalence"}, 40, check_gap_equivalence));
    defs.push_back(def("hqdiff-residual", "q-difference equation for H(z)",
                       "H = F/(-z;q^3)_inf cross-check and the residual of its functional "
                       "equation, z-degrees 0..D-2",
                       {"h-renormalization", "h-qdifference"}, 40, check_hqdiff, true));
    defs.push_back(def("jtp", "theta bilateral sum = triple product",
                       "the fixed arguments used by the evaluations plus 20 seeded random "
                       "unit monomials",
                       {"jacobi-triple-product"}, 200, check_jtp));
    defs.push_back(def("lemma-finite", "closed double sum = C_{3n-2}",
                       "finite evaluation vs recurrence and enumeration, n <= 10",
                       {"finite-evaluation", "f0-series", "f1-series"}, 40, check_lemma_finite));
    defs.push_back(def("limit-c0", "even-limit chain",
                       "q-binomial limit, the lost-notebook and rogers steps, and the "
                       "raw-vs-final form of the even limit",
                       {"qbinomial-limit", "limit-c0-evaluation", "limit-c0-ramanujan-step",
                        "limit-c0-rogers-step", "limit-c0-final"},
                       50, check_limit_c0));
    defs.push_back(def("limit-c1", "odd-limit chain",
                       "the lost-notebook and rogers steps, the raw-vs-final form of the odd "
                       "limit, and the 1-beta fold",
                       {"limit-c1-evaluation", "limit-c1-ramanujan-step", "limit-c1-rogers-step",
                        "limit-c1-final"},
                       50, check_limit_c1));
    defs.push_back(def("product-c2", "sum c_2(n) q^n = (-q^2,-q^3,-q^4,-q^6;q^6)_inf",
                       "count series from enumeration vs the modular product",
                       {"c2-product"}, 60, check_product_c2));
    defs.push_back(def("product-c2star", "sum c*_2(n) q^n = (-q,-q^3,-q^5,-q^6;q^6)_inf",
                       "count series from enumeration vs the modular product, plus the "
                       "refined C*_2 = C_1 - C_2 + C_3 combination",
                       {"c2star-product", "c2star-series-combination"}, 60,
                       check_product_c2star));
    defs.push_back(def("ramanujan-lost", "lost-notebook two-variable transform",
                       "both instantiations used by the limit chain plus 10 seeded random "
                       "monomials",
                       {"ramanujan-lost-notebook"}, 60, check_ramanujan));
    defs.push_back(def("recurrence-cnrec", "C_M recurrences and initial values",
                       "finite C against direct enumeration for M <= 30",
                       {"cm-recurrences", "cm-initial-values"}, 40, check_recurrence_cnrec));
    defs.push_back(def("recurrence-combined", "combined C_{3n+1} recurrence",
                       "the iterated single recurrence for n = 2..10",
                       {"cm-combined-recurrence"}, 40, check_recurrence_combined));
    defs.push_back(def("refined-c2", "C_2(t;q) = theta(tq^4;q^6)/(q^3;q^3)_inf",
                       "refined enumeration vs the theta quotient",
                       {"c2-refined-product"}, 50, check_refined_c2));
    defs.push_back(def("refined-c2star", "C*_2(t;q) = theta(tq;q^6)/(q^3;q^3)_inf",
                       "refined enumeration vs the theta quotient, plus the series-level "
                       "C*_2 = C_1 - C_2 + C_3",
                       {"c2star-refined-product", "c2star-series-combination"}, 50,
                       check_refined_c2star));
    defs.push_back(def("reindexing", "one-sided alternating sums reindex to each other",
                       "the negative-k half of the bilateral sum equals the shifted positive sum",
                       {"final-reindexing"}, 100, check_reindexing));
    defs.push_back(def("rogers-false", "rogers false theta transform",
                       "both instantiations used by the limit chain plus 10 seeded random "
                       "monomials",
                       {"rogers-false-theta"}, 60, check_rogers));
    defs.push_back(def("theorem-main", "two-line evaluation of C_1 and C_3",
                       "enumeration vs the theta / false-theta combination",
                       {"main-evaluation-c1-line", "main-evaluation-c3-line", "chi3-character"},
                       50, check_theorem_main));
    defs.push_back(def("theorem-mainab", "four-parameter evaluation of C^(alpha,beta)",
                       "enumeration vs the assembled evaluation for all four indicator pairs",
                       {"main-evaluation"}, 50, check_theorem_mainab));
    defs.push_back(def("theta-assembly", "bilateral sum assembles theta(-t^2q^2;q^6)",
                       "direct two-sided sum vs the theta constructor",
                       {"bilateral-theta-assembly"}, 100, check_theta_assembly));
    std::sort(defs.begin(), defs.end(),
              [](const CheckDef& a, const CheckDef& b) { return a.info.name < b.info.name; });
    return defs;
}

} // namespace

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> reg = build_registry();
    return reg;
}

} // namespace qcap::verify::detail

namespace qcap::verify {

const std::vector<std::string>& required_identity_keys() {
    static const std::vector<std::string> keys = {
        "gap-multiplicity-equivalence",
        "c2star-count-combination",
        "c2star-series-combination",
        "c2-eq-d1",
        "c2star-eq-d2",
        "c2-product",
        "c2star-product",
        "c2-refined-product",
        "c2star-refined-product",
        "jacobi-triple-product",
        "qbinomial-limit",
        "euler-inverse-expansion",
        "euler-product-expansion",
        "cauchy-even-index",
        "ramanujan-lost-notebook",
        "rogers-false-theta",
        "cm-recurrences",
        "cm-initial-values",
        "cm-combined-recurrence",
        "gamma-definition",
        "gamma-recurrence",
        "gamma-initials",
        "delta-recurrence",
        "delta-even-closed",
        "delta-odd-closed",
        "f-generating-function",
        "h-renormalization",
        "f-qdifference",
        "h-qdifference",
        "finite-evaluation",
        "f0-series",
        "f1-series",
        "limit-c0-evaluation",
        "limit-c0-ramanujan-step",
        "limit-c0-rogers-step",
        "limit-c0-final",
        "limit-c1-evaluation",
        "limit-c1-ramanujan-step",
        "limit-c1-rogers-step",
        "limit-c1-final",
        "false-theta-split-forms",
        "chi3-character",
        "bilateral-theta-assembly",
        "final-reindexing",
        "main-evaluation",
        "main-evaluation-c1-line",
        "main-evaluation-c3-line",
    };
    return keys;
}

} // namespace qcap::verify
