#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "icotrace/subgroups.hpp"
#include "icotrace/trace_identity.hpp"

namespace py = pybind11;
using namespace icotrace;

namespace {

const ClassFunction& row_by_name(const CharacterTable& T, const std::string& n) {
    for (int i = 0; i < T.size(); ++i)
        if (T.irrep(i).name == n) return T.irrep(i);
    throw std::invalid_argument("no character named " + n);
}

py::dict table_dict(const FiniteGroup& G, const CharacterTable& T) {
    py::dict out;
    out["group"] = G.name();
    const auto& ord = G.class_display_order();
    py::list classes, sizes, orders, rows;
    for (int c : ord) {
        classes.append(G.class_labels()[c]);
        sizes.append(G.class_size(c));
        orders.append(G.class_order(c));
    }
    for (int i = 0; i < T.size(); ++i) {
        py::dict row;
        row["name"] = T.irrep(i).name;
        py::list vals, numeric;
        for (int c : ord) {
            vals.append(T.irrep(i).values[c].to_string());
            numeric.append(T.irrep(i).values[c].embed());
        }
        row["values"] = vals;
        row["numeric"] = numeric;
        rows.append(row);
    }
    out["classes"] = classes;
    out["sizes"] = sizes;
    out["orders"] = orders;
    out["rows"] = rows;
    return out;
}

py::dict character_table_py(const std::string& spec) {
    FiniteGroup G = FiniteGroup::from_spec(spec);
    CharacterTable T(G);
    apply_standard_labeling(G, T);
    return table_dict(G, T);
}

struct IcosaCtx {
    Tower tw = build_icosahedral_tower("a4tilde");
    CharacterTable TG{tw.group()};
    CharacterTable TA{*tw.A4t->group};
    CharacterTable TQ{*tw.Q->group};
    IcosaCtx() {
        apply_standard_labeling(tw.group(), TG);
        apply_standard_labeling(*tw.A4t->group, TA);
        apply_standard_labeling(*tw.Q->group, TQ);
    }
};

IcosaCtx& ctx() {
    static IcosaCtx c;
    return c;
}

std::string sym_power_name(const std::string& row, int k) {
    auto& c = ctx();
    auto result = sym_power(row_by_name(c.TG, row), k);
    int idx = c.TG.find(result);
    if (idx >= 0) return c.TG.irrep(idx).name;
    std::string out;
    auto m = decompose(result, c.TG);
    for (const auto& [i, mult] : m.by_irrep) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += std::to_string(mult) + "*";
        out += c.TG.irrep(i).name;
    }
    return out;
}

std::string restrict_name(const std::string& row, const std::string& sub) {
    auto& c = ctx();
    const Subgroup& H = sub == "q8" ? *c.tw.Q : *c.tw.A4t;
    const CharacterTable& TH = sub == "q8" ? c.TQ : c.TA;
    auto r = restrict_to(row_by_name(c.TG, row), H);
    int idx = TH.find(r);
    return idx >= 0 ? TH.irrep(idx).name : std::string("(reducible)");
}

py::dict fiber_py(const std::string& base, const std::string& level) {
    auto& c = ctx();
    const Subgroup& H = level == "q8" ? *c.tw.Q : *c.tw.A4t;
    const CharacterTable& TH = level == "q8" ? c.TQ : c.TA;
    GaloisParameter p = make_parameter(c.tw.group(), H, row_by_name(TH, base), base);
    auto rep = descent_fibers(p, full_subgroup(c.tw.group()));
    py::dict out;
    out["count"] = rep.count();
    py::list members;
    for (const auto& m : rep.members) members.append(m.label);
    out["members"] = members;
    return out;
}

py::list satake_py(const std::string& row, const std::string& class_label) {
    auto& c = ctx();
    const auto& G = c.tw.group();
    int cls = -1;
    for (int i = 0; i < G.class_count(); ++i)
        if (G.class_labels()[i] == class_label) cls = i;
    if (cls < 0) throw std::invalid_argument("unknown class label " + class_label);
    py::list out;
    for (const auto& ev : satake_from_galois(row_by_name(c.TG, row), cls)) {
        py::dict v;
        v["exact"] = ev.to_string();
        v["numeric"] = ev.embed();
        out.append(v);
    }
    return out;
}

py::dict descent_cases_py() {
    auto rep = verify_icosahedral_descent_cases();
    py::dict out;
    out["pass"] = rep.pass;
    out["cases_checked"] = rep.cases_checked;
    out["matches"] = rep.matches;
    out["nu_exclusion_ok"] = rep.nu_exclusion_ok;
    out["order6_exclusion_ok"] = rep.order6_exclusion_ok;
    out["failures"] = rep.failures;
    return out;
}

py::dict generation_py() {
    auto& c = ctx();
    const auto& G = c.tw.group();
    auto t = verify_generation_tower(G, *c.tw.A4t, 5);
    auto q = verify_generation_tower(G, *c.tw.Q, 5);
    auto gk = verify_generation_gk(G);
    auto gm = verify_generation_gm(G);
    py::dict out;
    out["tower_pass"] = t.pass;
    out["tower_checked"] = t.checked;
    out["q_tower_pass"] = q.pass;
    out["gk_pass"] = gk.pass;
    out["gk_checked"] = gk.checked;
    out["gm_pass"] = gm.pass;
    return out;
}

py::dict trace_identity_py(int theorem, const std::string& variant, const std::string& tower,
                           const std::string& fprime, int n, long long bound, uint64_t seed) {
    ScenarioSpec spec;
    spec.theorem = theorem;
    spec.variant = variant.empty() ? 'A' : variant[0];
    spec.tower_kind = tower;
    spec.fprime = fprime;
    spec.n = n;
    spec.stream_bound = bound;
    spec.stream_seed = seed;
    auto rep = verify_identity(spec);
    py::dict out;
    out["config_ok"] = rep.config_ok;
    out["hypothesis_notes"] = rep.hypothesis_notes;
    out["pass"] = rep.pass;
    out["residual"] = rep.residual;
    out["pole_order"] = rep.pole_order;
    out["lhs_exact"] = rep.lhs_exact.to_string();
    out["rhs_exact"] = rep.rhs_exact.to_string();
    py::list lhs, rhs;
    for (const auto& r : rep.lhs_rows) lhs.append(r.label);
    for (const auto& r : rep.rhs_rows) rhs.append(r.label);
    out["lhs_entries"] = lhs;
    out["rhs_entries"] = rhs;
    return out;
}

double smoothed_ratio_py(int power, double X, long long bound, uint64_t seed) {
    auto T = FiniteGroup::from_spec("trivial");
    auto stream = chebotarev_stream(T, seed, bound);
    auto data = zeta_power_data(base_places(T, stream), power, bound);
    auto prof = laurent_at_1(data, power);
    BumpKernel phi(1.0, 0.5);
    auto lam = dirichlet_coefficients_numeric(data, (long long)(X * phi.support_hi()) + 2);
    return smoothed_sum(lam, phi, X) / residue_term(phi, X, prof);
}

py::dict probe_py(const std::string& entry, const std::string& partner, double X, long long bound,
                  uint64_t seed) {
    auto& c = ctx();
    BumpKernel phi(1.0, 0.5);
    auto rep = conj_nonzero_probe(c.tw, entry, partner, phi, {X}, seed, bound);
    py::dict out;
    out["hom_dim"] = rep.hom_dim;
    out["margin"] = rep.margin;
    out["ratio"] = rep.rows.empty() ? 0.0 : rep.rows.back().ratio;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact character theory, Satake-side Hecke operators and smoothed "
              "Rankin-Selberg sums for the icosahedral tower";
    m.def("character_table", &character_table_py, py::arg("group"),
          "exact character table with the printed labeling (sl2z5 | a4tilde | q8 | sl2z7 | "
          "cyclic<n> | trivial)");
    m.def("sym_power", &sym_power_name, py::arg("row"), py::arg("k"),
          "name (or decomposition) of Sym^k of an icosahedral row");
    m.def("restrict_row", &restrict_name, py::arg("row"), py::arg("subgroup"),
          "restriction of an icosahedral row to a4tilde or q8");
    m.def("descent_fibers", &fiber_py, py::arg("base"), py::arg("level"),
          "parameters at level F restricting to the given base character");
    m.def("satake", &satake_py, py::arg("row"), py::arg("class_label"),
          "Satake eigenvalues of a Galois-type parameter at a Frobenius class");
    m.def("descent_cases", &descent_cases_py,
          "exhaustive root-of-unity case analysis behind the local matching lemma");
    m.def("generation", &generation_py, "generation checks on the icosahedral tower");
    m.def("trace_identity", &trace_identity_py, py::arg("theorem") = 2, py::arg("variant") = "A",
          py::arg("tower") = "sl2z5", py::arg("fprime") = "a4tilde", py::arg("n") = 2,
          py::arg("bound") = 50000, py::arg("seed") = 11,
          "certify a trace identity scenario; see the README for the scenario grammar");
    m.def("smoothed_ratio", &smoothed_ratio_py, py::arg("power") = 1, py::arg("X") = 10000.0,
          py::arg("bound") = 1000000, py::arg("seed") = 5,
          "smoothed-sum / residue-term ratio for a zeta-power Euler product");
    m.def("nonzero_probe", &probe_py, py::arg("entry") = "theta2", py::arg("partner") = "theta2",
          py::arg("X") = 10000.0, py::arg("bound") = 200000, py::arg("seed") = 97,
          "numeric probe of the nonvanishing limit for a Galois-type entry");
    m.def("ramanujan_bound", &ramanujan_bound, py::arg("n"));
    m.attr("__version__") = "1.0.0";
}
