#include "icotrace/trace_identity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "icotrace/subgroups.hpp"

namespace icotrace {

namespace {

long long abelianization_order(const FiniteGroup& G) {
    long long o = 1;
    for (int f : G.abelianization()) o *= f;
    return o;
}

// canonical E-level place above a stream prime: the <sigma>-orbit of the
// identity, with its tau-partner orbit and the F'-places below both
struct ResolvedEPlace {
    int d;            // degree of the E-place over the base
    bool tau_fixed;   // tau lies in <sigma>, so w^tau = w
    int f1;           // degree of the F'-place below w
    int f2;           // degree of the F'-place below w^tau
    bool same_fprime; // the two F'-places coincide
    int frob1;        // class in H of Frobenius at the F'-place below w
    int frob2;        // ... below w^tau
    int sigma_class;  // class in G
};

ResolvedEPlace resolve_eplace(const Tower& tw, int sigma, int tau) {
    const FiniteGroup& G = tw.group();
    const Subgroup& H = tw.H;
    ResolvedEPlace r;
    r.d = G.element_order(sigma);
    r.sigma_class = G.class_of(sigma);
    // is tau in <sigma>?
    r.tau_fixed = false;
    {
        int x = G.identity();
        for (int i = 0; i < r.d; ++i) {
            if (x == tau) r.tau_fixed = true;
            x = G.mul(x, sigma);
        }
    }
    // orbit size of the coset gH under left multiplication by sigma: the
    // least t >= 1 with g^-1 sigma^t g in H
    auto orbit_size = [&](int g) {
        int x = sigma, t = 1;
        while (!H.contains(G.mul(G.mul(G.inverse(g), x), g))) {
            x = G.mul(sigma, x);
            ++t;
        }
        return t;
    };
    auto frob_class = [&](int g, int f) {
        int fr = G.mul(G.mul(G.inverse(g), G.pow(sigma, f)), g);
        int in_h = H.from_parent(fr);
        if (in_h < 0) throw std::logic_error("resolve_eplace: Frobenius not in H");
        return H.group->class_of(in_h);
    };
    r.f1 = orbit_size(G.identity());
    r.frob1 = frob_class(G.identity(), r.f1);
    r.f2 = orbit_size(tau);
    r.frob2 = frob_class(tau, r.f2);
    // the two F'-places coincide iff tauH lies in the sigma-orbit of H
    r.same_fprime = false;
    {
        int cur = G.identity();
        for (int i = 0; i < r.d && !r.same_fprime; ++i) {
            if (H.contains(G.mul(G.inverse(tau), cur))) r.same_fprime = true;
            cur = G.mul(sigma, cur);
        }
    }
    return r;
}

struct SideEval {
    Cyclotomic exact = Cyclotomic::zero();
    std::vector<TraceRow> rows;
    bool all_hom_equal = true;
    int hom_value = -1;
};

constexpr int kPlaceW = 0;      // E-level canonical place (per insertion part i: 10*i)
constexpr int kPlaceWTau = 1;   // its tau partner (10*i + 1)
constexpr int kPlaceFp1 = 100;  // F'-place below w (10*i + 100... distinct ranges)
constexpr int kPlaceFp2 = 101;
constexpr int kPlaceF = 200;    // the base place (one per insertion part: 10*i + 200)

}  // namespace

Tower build_scenario_tower(const ScenarioSpec& spec) {
    if (spec.tower_kind == "sl2z5")
        return build_icosahedral_tower(spec.fprime, spec.tau_order, spec.tau);
    if (spec.tower_kind == "sl2z7") return build_sl2z7_tower();
    throw std::invalid_argument("unknown tower kind: " + spec.tower_kind);
}

namespace {

// evaluate one side of the identity; level == "Fprime" for the left side
SideEval evaluate_side(const ScenarioSpec& spec, const Tower& tw,
                       const std::vector<StreamPlace>& stream, const std::string& level) {
    const FiniteGroup& G = tw.group();
    bool left = level == "Fprime";
    // theorem 1 restricts only the F'-side sum to E-primitive entries; the
    // rho-type exclusion of theorem 2 case (B) applies to both sides
    bool primitive_only = spec.theorem == 1 && left;
    bool exclude_rho = spec.theorem == 2 && spec.variant == 'B';
    SpectrumModel spec_model = build_spectrum(tw, spec.n, level, primitive_only, exclude_rho);

    // resolve insertion data once per stream prime used
    auto stream_class = [&](long long q) -> int {
        for (const auto& sp : stream)
            if (sp.q == q) return sp.class_idx;
        throw std::invalid_argument("insertion prime not in the stream");
    };

    SideEval out;
    for (const auto& entry : spec_model.entries) {
        TraceRow row;
        row.label = entry.label;
        // isobaric constituents of the base change to E: parameters trivial
        // on W_E' restrict to dim copies of the trivial character
        {
            // isobaric constituents at level E: the restriction decomposes
            // into dim copies of the trivial character (checked exactly)
            Subgroup triv = trivial_subgroup(G);
            GaloisParameter at_e = base_change(entry.param, triv);
            long long dim = entry.param.dim();
            if (at_e.character.values[0] != Cyclotomic(Rational(dim)))
                throw std::logic_error("entry restriction to level E is not trivial-isotypic");
            std::vector<ClassFunction> cons(dim, trivial_character(*triv.group));
            row.hom_dim = hom_I_dim(cons, cons);
        }
        row.contributes = row.hom_dim != 0;
        // Hecke factor
        Cyclotomic t = Cyclotomic::one();
        if (spec.insertion.kind == HeckeInsertion::Kind::EModulus) {
            if (spec.insertion.e_parts.size() > 9)
                throw std::invalid_argument("insertion: at most 9 prime-power parts");
            SymPoly f = SymPoly::constant(Rational(1));
            std::map<int, PlaceSubst> subst;
            SatakePoint point;
            int part_idx = 0;
            for (const auto& part : spec.insertion.e_parts) {
                int sigma = G.class_rep(stream_class(part.q));
                auto rp = resolve_eplace(tw, sigma, tw.tau);
                int w = 10 * part_idx + kPlaceW;
                int wt = rp.tau_fixed ? w : 10 * part_idx + kPlaceWTau;
                f = f * sym_test_poly(spec.n, part.j, w, wt);
                if (left) {
                    int p1 = 10 * part_idx + kPlaceFp1;
                    int p2 = rp.same_fprime ? p1 : 10 * part_idx + kPlaceFp2;
                    if (rp.same_fprime && rp.f1 != rp.f2)
                        throw std::logic_error("insertion: inconsistent F' place degrees");
                    subst[w] = {p1, rp.d / rp.f1};
                    if (!rp.tau_fixed) subst[wt] = {p2, rp.d / rp.f2};
                    point.values[p1] =
                        satake_from_galois(entry.param.character, rp.frob1);
                    if (!rp.same_fprime)
                        point.values[p2] =
                            satake_from_galois(entry.param.character, rp.frob2);
                } else {
                    int pv = 10 * part_idx + kPlaceF;
                    subst[w] = {pv, rp.d};
                    if (!rp.tau_fixed) subst[wt] = {pv, rp.d};
                    point.values[pv] =
                        satake_from_galois(entry.param.character, rp.sigma_class);
                }
                ++part_idx;
            }
            t = eval_at(base_change_subst(f, subst), point);
        } else if (spec.insertion.kind == HeckeInsertion::Kind::FprimePoly) {
            int sigma = G.class_rep(stream_class(spec.insertion.fprime_q));
            auto rp = resolve_eplace(tw, sigma, tw.tau);
            // h_m(t_1..t_n) at the designated F'-place
            SymPoly h = SymPoly::monomial({{kPlaceFp1, spec.n}},
                                          SymPoly::Exponents(spec.n, 0), Rational(0));
            {
                std::vector<int> pick(spec.insertion.fprime_m, 0);
                int m = spec.insertion.fprime_m;
                while (true) {
                    SymPoly::Exponents e(spec.n, 0);
                    for (int tt = 0; tt < m; ++tt) e[pick[tt]] += 1;
                    h.add_term(e, Rational(1));
                    int pos = m - 1;
                    while (pos >= 0 && pick[pos] == spec.n - 1) --pos;
                    if (pos < 0) break;
                    int v = pick[pos] + 1;
                    for (int tt = pos; tt < m; ++tt) pick[tt] = v;
                }
            }
            SatakePoint point;
            if (left) {
                point.values[kPlaceFp1] =
                    satake_from_galois(entry.param.character, rp.frob1);
                t = eval_at(h, point);
            } else {
                std::map<int, PlaceSubst> subst{{kPlaceFp1, {kPlaceF, rp.f1}}};
                point.values[kPlaceF] =
                    satake_from_galois(entry.param.character, rp.sigma_class);
                t = eval_at(base_change_subst(h, subst), point);
            }
        }
        t *= Cyclotomic(spec.insertion.scale);
        row.hecke_exact = t.to_string();
        row.hecke = t.embed();
        if (row.contributes) {
            if (out.hom_value < 0) out.hom_value = row.hom_dim;
            if (row.hom_dim != out.hom_value) out.all_hom_equal = false;
            out.exact += t;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace

TraceReport verify_identity(const ScenarioSpec& spec) {
    TraceReport rep;
    Tower tw = build_scenario_tower(spec);
    const FiniteGroup& G = tw.group();

    // hypothesis checks (configuration errors, not identity failures)
    bool ok = true;
    auto note = [&](bool cond, const std::string& what) {
        rep.hypothesis_notes.push_back((cond ? "ok: " : "FAILED: ") + what);
        ok = ok && cond;
    };
    note(tw.generating, "<tau, Gal(E/F')> = Gal(E/F)");
    note(tw.solvable_H, "Gal(E/F') solvable");
    note(bundled_schur_multiplier_order(tw.H.group->name()) == 1,
         "H^2(Gal(E/F'), C^x) = 0 (bundled)");
    if (spec.theorem == 1) {
        note(std::gcd((long long)tw.H.group->order(), (long long)spec.n) == 1,
             "[E:F'] coprime to n");
        // no nontrivial irreducible representation of degree dividing n
        CharacterTable TG(G);
        bool none = true;
        for (int i = 0; i < TG.size(); ++i) {
            long long d = TG.irrep(i).degree().num().to_longlong();
            if (spec.n % d == 0 && d > 0 &&
                TG.irrep(i).values != trivial_character(G).values)
                none = false;
        }
        note(none, "no nontrivial irreducible of degree dividing n");
        note(check_index_condition(G, spec.n), "no proper subgroup of index dividing n");
    }
    if (spec.theorem == 2) {
        note(spec.tower_kind == "sl2z5" && spec.fprime == "a4tilde" && spec.n == 2,
             "theorem 2 tower: F' = E^{A4t}, n = 2");
        note(G.element_order(tw.tau) == 5, "tau of order 5");
    }
    if (spec.theorem == 3) {
        bool case_n2 = spec.n == 2 && spec.fprime == "q8";
        bool case_n3 = spec.n == 3 && spec.fprime == "a4tilde";
        note(spec.tower_kind == "sl2z5" && (case_n2 || case_n3),
             "theorem 3 tower: (n=2, F'=E^Q) or (n=3, F'=E^{A4t})");
    }
    rep.config_ok = ok;
    if (!ok) return rep;

    auto stream = chebotarev_stream(G, spec.stream_seed, spec.stream_bound);
    SideEval lhs = evaluate_side(spec, tw, stream, "Fprime");
    SideEval rhs = evaluate_side(spec, tw, stream, "F");
    rep.lhs_rows = lhs.rows;
    rep.rhs_rows = rhs.rows;

    // theorem normalization: required pole order of contributing entries
    int k_required = (spec.theorem == 1 || (spec.theorem == 2 && spec.variant == 'B'))
                         ? 1
                         : spec.n * spec.n;
    bool lhs_empty = lhs.hom_value < 0, rhs_empty = rhs.hom_value < 0;
    if (!lhs_empty && (!lhs.all_hom_equal || lhs.hom_value != k_required)) {
        rep.hypothesis_notes.push_back(
            "FAILED: contributing entries do not match the theorem normalization");
        rep.config_ok = false;
        return rep;
    }
    if (!rhs_empty && (!rhs.all_hom_equal || rhs.hom_value != k_required)) {
        rep.hypothesis_notes.push_back(
            "FAILED: contributing entries do not match the theorem normalization");
        rep.config_ok = false;
        return rep;
    }
    rep.pole_order = k_required;

    // prefactors
    long long hab = abelianization_order(*tw.H.group);
    Rational lhs_pref, rhs_pref(1);
    switch (spec.theorem) {
        case 1:
            lhs_pref = Rational(BigInt(1), BigInt(hab));
            break;
        case 2:
            lhs_pref = (spec.variant == 'A') ? Rational(BigInt(2), BigInt(hab))
                                             : Rational(BigInt(1), BigInt(hab));
            break;
        case 3:
            lhs_pref = Rational(2);
            break;
        default:
            throw std::invalid_argument("theorem must be 1, 2 or 3");
    }
    rep.lhs_exact = lhs.exact * Cyclotomic(lhs_pref);
    rep.rhs_exact = rhs.exact * Cyclotomic(rhs_pref);
    rep.exact_equal = rep.lhs_exact == rep.rhs_exact;

    // shared residue factor: the entries' Rankin-Selberg data at level E is
    // the stream zeta to the power k
    rep.symbolic = true;
    rep.tolerance = 1e-6;
    double shared_factor = 1.0;
    if (!lhs_empty || !rhs_empty) {
        auto placesE = total_places(G, stream);
        auto dataE = zeta_power_data(placesE, k_required, spec.stream_bound);
        auto prof = laurent_at_1(dataE, k_required);
        double fact = 1.0;
        for (int i = 1; i < k_required; ++i) fact *= i;
        shared_factor = prof.c_leading() / fact;
        rep.residue_factor = shared_factor;

        // advisory numeric columns: normalized smoothed sums vs the symbolic
        // limit, using the same truncated Euler data
        double max_x = 0;
        for (double X : spec.x_list) max_x = std::max(max_x, X);
        if (max_x > 0) {
            auto lam = dirichlet_coefficients_numeric(
                dataE, (long long)(max_x * spec.kernel.support_hi()) + 2);
            for (double X : spec.x_list) {
                double num = smoothed_sum(lam, spec.kernel, X) /
                             phi_xs_derivative(spec.kernel, X, k_required - 1);
                rep.numeric_columns.push_back({X, num / shared_factor});
            }
        }
    }
    rep.lhs_total = rep.lhs_exact.embed().real() * shared_factor;
    rep.rhs_total = rep.rhs_exact.embed().real() * shared_factor;
    double denom = std::max(std::abs(rep.lhs_total), std::abs(rep.rhs_total));
    rep.residual = denom < 1e-12 ? 0.0 : std::abs(rep.lhs_total - rep.rhs_total) / denom;
    rep.pass = rep.residual <= rep.tolerance;

    // fiber bookkeeping: each LHS entry's descent fiber up to level F
    if (spec.tower_kind == "sl2z5") {
        Subgroup F = full_subgroup(G);
        SpectrumModel lhs_model = build_spectrum(tw, spec.n, "Fprime", spec.theorem == 1,
                                                 spec.theorem == 2 && spec.variant == 'B');
        for (const auto& e : lhs_model.entries) {
            auto fib = descent_fibers(e.param, F);
            rep.fiber_counts.push_back({e.label, fib.count()});
        }
    }
    return rep;
}

ProbeReport conj_nonzero_probe(const Tower& tw, const std::string& entry_label,
                               const std::string& partner_label, const BumpKernel& kernel,
                               const std::vector<double>& x_list, uint64_t seed,
                               long long bound) {
    const FiniteGroup& G = tw.group();
    CharacterTable T(G);
    apply_standard_labeling(G, T);
    const ClassFunction *chi = nullptr, *par = nullptr;
    for (int i = 0; i < T.size(); ++i) {
        if (T.irrep(i).name == entry_label) chi = &T.irrep(i);
        if (T.irrep(i).name == partner_label) par = &T.irrep(i);
    }
    if (!chi || !par) throw std::invalid_argument("conj_nonzero_probe: unknown entry label");
    ProbeReport rep;
    rep.hom_dim = hom_I_dim({*chi}, {*par});
    auto stream = chebotarev_stream(G, seed, bound);
    auto data = rankin_selberg_data(*chi, *par, base_places(G, stream), bound);
    PoleProfile prof;
    if (rep.hom_dim > 0) {
        prof = laurent_at_1(data, rep.hom_dim);
        rep.margin = std::abs(prof.c_leading());
    }
    double max_x = 0;
    for (double X : x_list) max_x = std::max(max_x, X);
    auto lam = dirichlet_coefficients_numeric(data, (long long)(max_x * kernel.support_hi()) + 2);
    for (double X : x_list) {
        ProbeRow row;
        row.X = X;
        row.smoothed = smoothed_sum(lam, kernel, X);
        row.residue = rep.hom_dim > 0 ? residue_term(kernel, X, prof) : 0.0;
        row.ratio = row.residue != 0.0 ? row.smoothed / row.residue : 0.0;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace icotrace
