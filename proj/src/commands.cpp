#include "icotrace/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "icotrace/report.hpp"
#include "icotrace/subgroups.hpp"
#include "icotrace/trace_identity.hpp"

namespace icotrace {

namespace {

const ClassFunction& row_by_name(const CharacterTable& T, const std::string& n) {
    for (int i = 0; i < T.size(); ++i)
        if (T.irrep(i).name == n) return T.irrep(i);
    throw std::runtime_error("no character named " + n);
}

std::string chartab_text(const FiniteGroup& G, const CharacterTable& T) {
    std::ostringstream os;
    os << "group\t" << G.name() << "\n";
    const auto& ord = G.class_display_order();
    os << "classes";
    for (int c : ord) os << "\t" << G.class_labels()[c];
    os << "\nsizes";
    for (int c : ord) os << "\t" << G.class_size(c);
    os << "\norders";
    for (int c : ord) os << "\t" << G.class_order(c);
    os << "\n";
    for (int i = 0; i < T.size(); ++i) {
        os << "row\t" << T.irrep(i).name;
        for (int c : ord) os << "\t" << T.irrep(i).values[c].to_string();
        os << "\n";
    }
    return os.str();
}

int cmd_chartab(const RunConfig& cfg, const std::string& out_dir, const std::string& fixture_dir,
                bool write_fixture, std::ostream& log) {
    std::string group = cfg.get_or("run.group", "sl2z5");
    FiniteGroup G = FiniteGroup::from_spec(group);
    CharacterTable T(G);
    apply_standard_labeling(G, T);
    std::string text = chartab_text(G, T);

    ReportDocument doc("chartab", cfg.digest());
    const auto& ord = G.class_display_order();
    std::vector<std::string> cols{"name"};
    for (int c : ord) cols.push_back(G.class_labels()[c]);
    doc.begin_table("character_table", cols);
    for (int i = 0; i < T.size(); ++i) {
        std::vector<std::string> row{T.irrep(i).name};
        for (int c : ord) row.push_back(T.irrep(i).values[c].to_string());
        doc.add_row(row);
    }
    doc.begin_table("character_table_numeric", cols);
    for (int i = 0; i < T.size(); ++i) {
        std::vector<std::string> row{T.irrep(i).name};
        for (int c : ord) {
            auto z = T.irrep(i).values[c].embed();
            row.push_back(ReportDocument::format_double(z.real()) + "+" +
                          ReportDocument::format_double(z.imag()) + "i");
        }
        doc.add_row(row);
    }

    std::string fixture_path = fixture_dir + "/" + group + "_chartab.tsv";
    if (write_fixture) {
        std::filesystem::create_directories(fixture_dir);
        std::ofstream out(fixture_path, std::ios::binary);
        out << text;
        log << "wrote fixture " << fixture_path << "\n";
        doc.set_status(true, "fixture written");
        doc.write(out_dir);
        return 0;
    }
    std::ifstream in(fixture_path, std::ios::binary);
    if (!in) {
        log << "error: fixture not found: " << fixture_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    bool match = buf.str() == text;
    doc.add_note("fixture " + fixture_path + (match ? " matches" : " DIFFERS"));
    doc.set_status(match, match ? "table matches the golden fixture"
                                : "table differs from the golden fixture");
    doc.write(out_dir);
    log << (match ? "chartab: diff empty\n" : "chartab: DIFF NONEMPTY\n");
    return match ? 0 : 1;
}

int cmd_branch(const RunConfig& cfg, const std::string& out_dir, std::ostream& log) {
    ReportDocument doc("branch", cfg.digest());
    doc.begin_table("checks", {"check", "ok"});
    bool all = true;
    auto check = [&](const std::string& name, bool ok) {
        doc.add_row({name, ok ? "yes" : "NO"});
        all = all && ok;
    };
    bool battery = cfg.get_int_or("branch.battery", 1) != 0;
    auto queries = cfg.get_list_or("branch.queries");
    if (battery) {
        Tower tw = build_icosahedral_tower("a4tilde");
        const auto& G = tw.group();
        CharacterTable TG(G);
        apply_standard_labeling(G, TG);
        CharacterTable TA(*tw.A4t->group);
        apply_standard_labeling(*tw.A4t->group, TA);
        CharacterTable TQ(*tw.Q->group);
        apply_standard_labeling(*tw.Q->group, TQ);
        const auto &theta2 = row_by_name(TG, "theta2"), &theta2p = row_by_name(TG, "theta2'");
        auto xi2 = galois_twist_char(theta2, kXiTwist);
        check("xi(theta2) = theta2'", xi2.values == theta2p.values);
        auto s2 = sym_power(theta2, 2), s2x = sym_power(theta2p, 2);
        check("Sym^2(theta2) is 3-dimensional irreducible",
              TG.find(s2) >= 0 && s2.degree() == Rational(3));
        check("Sym^2(theta2) != Sym^2(xi theta2)", s2.values != s2x.values);
        auto s3 = sym_power(theta2, 3);
        check("Sym^3(theta2) = Sym^3(xi theta2)", s3.values == sym_power(theta2p, 3).values);
        check("Sym^3(theta2) is 4-dimensional irreducible",
              TG.find(s3) >= 0 && s3.degree() == Rational(4));
        auto t22 = tensor(theta2, theta2p);
        check("theta2 (x) xi theta2 is the other 4-dimensional row",
              TG.find(t22) >= 0 && t22.values != s3.values);
        check("Sym^4(theta2) = theta5",
              sym_power(theta2, 4).values == row_by_name(TG, "theta5").values);
        check("Sym^4(xi theta2) = theta5",
              sym_power(theta2p, 4).values == row_by_name(TG, "theta5").values);
        check("Ind(chi) = theta5",
              induce_from(row_by_name(TA, "psi1"), *tw.A4t).values ==
                  row_by_name(TG, "theta5").values);
        check("Sym^5(theta2) = theta6",
              sym_power(theta2, 5).values == row_by_name(TG, "theta6").values);
        check("Sym^2(theta2) (x) xi theta2 = Sym^5(theta2)",
              tensor(s2, theta2p).values == sym_power(theta2, 5).values);
        check("theta2 (x) Sym^2(xi theta2) = Sym^5(theta2)",
              tensor(theta2, s2x).values == sym_power(theta2, 5).values);
        check("theta2|A4t = psi2",
              restrict_to(theta2, *tw.A4t).values == row_by_name(TA, "psi2").values);
        check("xi theta2|A4t = psi2",
              restrict_to(theta2p, *tw.A4t).values == row_by_name(TA, "psi2").values);
        check("theta3|A4t = psi3",
              restrict_to(row_by_name(TG, "theta3"), *tw.A4t).values ==
                  row_by_name(TA, "psi3").values);
        check("theta2|Q = Theta2",
              restrict_to(theta2, *tw.Q).values == row_by_name(TQ, "Theta2").values);
        check("xi theta2|Q = Theta2",
              restrict_to(theta2p, *tw.Q).values == row_by_name(TQ, "Theta2").values);
        check("degree-2 rows inequivalent", theta2.values != theta2p.values);
        check("degree-3 rows inequivalent",
              row_by_name(TG, "theta3").values != row_by_name(TG, "theta3'").values);
        check("degree-4 rows inequivalent",
              row_by_name(TG, "theta4").values != row_by_name(TG, "theta4'").values);
    }
    if (!queries.empty()) {
        Tower tw = build_icosahedral_tower("a4tilde");
        const auto& G = tw.group();
        CharacterTable TG(G);
        apply_standard_labeling(G, TG);
        doc.begin_table("queries", {"query", "result", "decomposition"});
        for (const auto& q : queries) {
            // forms: sym:<k>:<row> | ext:<k>:<row> | tensor:<row>:<row> |
            // restrict:<row>:<a4tilde|q8> | twist:<row>
            std::vector<std::string> parts;
            {
                std::istringstream in(q);
                std::string tok;
                while (std::getline(in, tok, ':')) parts.push_back(tok);
            }
            try {
                ClassFunction result;
                if (parts.at(0) == "sym")
                    result = sym_power(row_by_name(TG, parts.at(2)), (int)std::stol(parts.at(1)));
                else if (parts.at(0) == "ext")
                    result = ext_power(row_by_name(TG, parts.at(2)), (int)std::stol(parts.at(1)));
                else if (parts.at(0) == "tensor")
                    result = tensor(row_by_name(TG, parts.at(1)), row_by_name(TG, parts.at(2)));
                else if (parts.at(0) == "twist")
                    result = galois_twist_char(row_by_name(TG, parts.at(1)), kXiTwist);
                else if (parts.at(0) == "restrict") {
                    const Subgroup& H = parts.at(2) == "q8" ? *tw.Q : *tw.A4t;
                    CharacterTable TH(*H.group);
                    apply_standard_labeling(*H.group, TH);
                    auto r = restrict_to(row_by_name(TG, parts.at(1)), H);
                    int idx = TH.find(r);
                    doc.add_row({q, idx >= 0 ? TH.irrep(idx).name : "(reducible)", ""});
                    continue;
                } else
                    throw std::runtime_error("unknown query kind " + parts.at(0));
                auto m = decompose(result, TG);
                std::ostringstream dc;
                bool first = true;
                for (const auto& [idx, mult] : m.by_irrep) {
                    if (!first) dc << " + ";
                    first = false;
                    if (mult != 1) dc << mult << "*";
                    dc << TG.irrep(idx).name;
                }
                int idx = TG.find(result);
                doc.add_row({q, idx >= 0 ? TG.irrep(idx).name : "(sum)", dc.str()});
            } catch (const std::exception& e) {
                log << "error: bad query '" << q << "': " << e.what() << "\n";
                return 2;
            }
        }
    }
    doc.set_status(all, all ? "branching battery holds exactly" : "branching battery FAILED");
    doc.write(out_dir);
    log << (all ? "branch: all identities hold\n" : "branch: FAILURE\n");
    return all ? 0 : 1;
}

int cmd_fibers(const RunConfig& cfg, const std::string& out_dir, std::ostream& log) {
    ReportDocument doc("fibers", cfg.digest());
    Tower tw = build_icosahedral_tower("a4tilde");
    const auto& G = tw.group();
    Subgroup F = full_subgroup(G);
    CharacterTable TA(*tw.A4t->group);
    apply_standard_labeling(*tw.A4t->group, TA);
    CharacterTable TQ(*tw.Q->group);
    apply_standard_labeling(*tw.Q->group, TQ);
    Subgroup E = trivial_subgroup(G);

    bool all = true;
    doc.begin_table("fibers", {"base", "level", "members", "count", "expected"});
    auto fiber_row = [&](const std::string& base_name, const ClassFunction& chi,
                         const Subgroup& level, int expected) {
        GaloisParameter p = make_parameter(G, level, chi, base_name);
        auto rep = descent_fibers(p, F);
        std::ostringstream mem;
        for (int i = 0; i < rep.count(); ++i) mem << (i ? " " : "") << rep.members[i].label;
        doc.add_row({base_name, level.group->name(), mem.str(), std::to_string(rep.count()),
                     std::to_string(expected)});
        all = all && rep.count() == expected;
    };
    fiber_row("psi2", row_by_name(TA, "psi2"), tw.A4t.value(), 2);
    fiber_row("psi3", row_by_name(TA, "psi3"), tw.A4t.value(), 2);
    fiber_row("Theta2", row_by_name(TQ, "Theta2"), tw.Q.value(), 2);
    fiber_row("1", trivial_character(*tw.A4t->group), tw.A4t.value(), 1);

    doc.begin_table("uniqueness", {"clause", "count", "expected"});
    auto u2 = invariant_extension(trivial_character(*E.group), E, *tw.Q, 2);
    doc.add_row({"2-dim over Q restricting to trivial+trivial", std::to_string(u2.count()), "1"});
    all = all && u2.count() == 1;
    auto u3 = invariant_extension(trivial_character(*E.group), E, *tw.A4t, 3);
    doc.add_row({"3-dim over A4t restricting to trivial^3", std::to_string(u3.count()), "1"});
    all = all && u3.count() == 1;
    auto ab = tw.A4t->group->abelianization();
    long long hab = 1;
    for (int f : ab) hab *= f;
    doc.add_row({"|A4t^ab|", std::to_string(hab), "3"});
    all = all && hab == 3;

    doc.set_status(all, all ? "fiber counts match" : "fiber counts FAILED");
    doc.write(out_dir);
    log << (all ? "fibers: counts match\n" : "fibers: FAILURE\n");
    return all ? 0 : 1;
}

int cmd_satake(const RunConfig& cfg, const std::string& out_dir, std::ostream& log) {
    ReportDocument doc("satake", cfg.digest());
    int n = (int)cfg.get_int_or("satake.n", 2);
    int jmax = (int)cfg.get_int_or("satake.jmax", 3);
    long long M = cfg.get_int_or("satake.coeff_bound", 500);
    uint64_t seed = (uint64_t)cfg.get_int_or("stream.seed", 20260808);
    long long bound = cfg.get_int_or("stream.bound", 2000);

    doc.begin_table("test_functions", {"j", "terms", "polynomial"});
    for (int j = 0; j <= jmax; ++j) {
        auto p = sym_test_poly(n, j, 0, 1);
        doc.add_row({std::to_string(j), std::to_string(p.term_count()), p.to_string()});
    }

    // dual-route Dirichlet identity for the theta2-type object
    Tower tw = build_icosahedral_tower("a4tilde", 5);
    const auto& G = tw.group();
    CharacterTable T(G);
    apply_standard_labeling(G, T);
    const auto& theta2 = row_by_name(T, "theta2");
    auto stream = chebotarev_stream(G, seed, bound);
    std::vector<std::pair<long long, std::vector<Cyclotomic>>> routeA, routeB;
    for (const auto& sp : stream) {
        if (sp.q > M) continue;
        int jm = 0;
        long long qq = 1;
        while (qq <= M / sp.q) {
            qq *= sp.q;
            ++jm;
        }
        auto A = satake_from_galois(theta2, sp.class_idx);
        std::vector<Cyclotomic> ca(jm + 1), Ainv;
        for (int j = 0; j <= jm; ++j) {
            SatakePoint x;
            x.values[0] = A;
            x.values[1] = A;
            ca[j] = eval_at(sym_test_poly(n, j, 0, 1), x);
        }
        for (const auto& z : A) Ainv.push_back(z.inv());
        routeA.push_back({sp.q, ca});
        routeB.push_back({sp.q, rs_local_coefficients(A, Ainv, jm)});
    }
    auto sA = euler_expand(routeA, M), sB = euler_expand(routeB, M);
    bool match = sA.coeff.size() == sB.coeff.size();
    long long checked = 0;
    for (const auto& [m, c] : sA.coeff) {
        auto it = sB.coeff.find(m);
        match = match && it != sB.coeff.end() && it->second == c;
        ++checked;
    }
    doc.begin_table("dirichlet_identity", {"coefficients_compared", "bound", "match"});
    doc.add_row({std::to_string(checked), std::to_string(M), match ? "exact" : "MISMATCH"});
    doc.begin_table("coefficients", {"m", "lambda_exact", "lambda_numeric"});
    for (const auto& [m, c] : sA.coeff) {
        auto z = c.embed();
        doc.add_row({std::to_string(m), c.to_string(),
                     ReportDocument::format_double(z.real()) + "+" +
                         ReportDocument::format_double(z.imag()) + "i"});
    }
    doc.set_status(match, match ? "trace route equals local-factor route coefficient-for-coefficient"
                                : "Dirichlet identity FAILED");
    doc.write(out_dir);
    log << (match ? "satake: Dirichlet identity exact\n" : "satake: FAILURE\n");
    return match ? 0 : 1;
}

int cmd_smoothsum(const RunConfig& cfg, const std::string& out_dir, std::ostream& log) {
    ReportDocument doc("smoothsum", cfg.digest());
    int power = (int)cfg.get_int_or("smoothsum.power", 1);
    uint64_t seed = (uint64_t)cfg.get_int_or("stream.seed", 5);
    long long bound = cfg.get_int_or("stream.bound", 1000000);
    double tolerance = cfg.get_double_or("smoothsum.tolerance", 0.05);
    BumpKernel phi(cfg.get_double_or("kernel.center", 1.0), cfg.get_double_or("kernel.radius", 0.5));
    std::vector<double> xs;
    for (const auto& t : cfg.get_list_or("smoothsum.x_list")) xs.push_back(std::stod(t));
    if (xs.empty()) xs = {100.0, 1000.0, 10000.0};

    std::string group = cfg.get_or("stream.group", "trivial");
    auto T = FiniteGroup::from_spec(group);
    auto stream = chebotarev_stream(T, seed, bound);
    {
        auto chi = stream_chi_square(T, stream);
        std::vector<long long> counts(T.class_count(), 0);
        for (const auto& sp : stream) counts[sp.class_idx]++;
        doc.begin_table("stream", {"class", "size", "observed", "expected"});
        for (int c = 0; c < T.class_count(); ++c)
            doc.add_row({T.class_labels()[c], std::to_string(T.class_size(c)),
                         std::to_string(counts[c]),
                         ReportDocument::format_double((double)stream.size() *
                                                       T.class_size(c) / T.order())});
        doc.add_note("chi-square " + ReportDocument::format_double(chi.statistic) +
                     " (threshold " + ReportDocument::format_double(chi.threshold) + ", " +
                     (chi.pass ? "pass" : "FAIL") + ")");
    }
    auto data = zeta_power_data(base_places(T, stream), power, bound);
    auto prof = laurent_at_1(data, power);
    double maxx = 0;
    for (double x : xs) maxx = std::max(maxx, x);
    auto lam = dirichlet_coefficients_numeric(data, (long long)(maxx * phi.support_hi()) + 2);
    doc.begin_table("ratios", {"X", "smoothed_sum", "residue_term", "ratio"});
    double last_ratio = 0;
    for (double x : xs) {
        double num = smoothed_sum(lam, phi, x);
        double res = residue_term(phi, x, prof);
        last_ratio = num / res;
        doc.add_row({ReportDocument::format_double(x), ReportDocument::format_double(num),
                     ReportDocument::format_double(res), ReportDocument::format_double(last_ratio)});
    }
    bool ok = std::abs(last_ratio - 1.0) <= tolerance;
    doc.set_status(ok, ok ? "smoothed sums track the residue term" : "ratio out of tolerance");
    doc.write(out_dir);
    log << (ok ? "smoothsum: within tolerance\n" : "smoothsum: FAILURE\n");
    return ok ? 0 : 1;
}

int cmd_trace_identity(const RunConfig& cfg, const std::string& out_dir, std::ostream& log) {
    ScenarioSpec spec;
    spec.theorem = (int)cfg.get_int_or("trace.theorem", 2);
    std::string variant = cfg.get_or("trace.variant", "A");
    spec.variant = variant.empty() ? 'A' : variant[0];
    spec.tower_kind = cfg.get_or("tower.kind", "sl2z5");
    spec.fprime = cfg.get_or("tower.fprime", "a4tilde");
    spec.n = (int)cfg.get_int_or("spectrum.n", 2);
    spec.tau = (int)cfg.get_int_or("tower.tau", -1);
    spec.tau_order = (int)cfg.get_int_or("tower.tau_order", 5);
    spec.stream_seed = (uint64_t)cfg.get_int_or("stream.seed", 11);
    spec.stream_bound = cfg.get_int_or("stream.bound", 100000);
    spec.kernel =
        BumpKernel(cfg.get_double_or("kernel.center", 1.0), cfg.get_double_or("kernel.radius", 0.5));
    std::string hk = cfg.get_or("hecke.kind", "none");
    if (hk == "emodulus") {
        spec.insertion.kind = HeckeInsertion::Kind::EModulus;
        for (const auto& part : cfg.get_list_or("hecke.parts")) {
            auto colon = part.find(':');
            if (colon == std::string::npos) {
                log << "error: hecke.parts entries must be q:j\n";
                return 2;
            }
            spec.insertion.e_parts.push_back(
                {std::stoll(part.substr(0, colon)), (int)std::stol(part.substr(colon + 1))});
        }
    } else if (hk == "fprimepoly") {
        spec.insertion.kind = HeckeInsertion::Kind::FprimePoly;
        spec.insertion.fprime_q = cfg.get_int_or("hecke.q", 7);
        spec.insertion.fprime_m = (int)cfg.get_int_or("hecke.m", 2);
    } else if (hk != "none") {
        log << "error: hecke.kind must be none | emodulus | fprimepoly\n";
        return 2;
    }
    spec.x_list.clear();
    for (const auto& t : cfg.get_list_or("trace.x_list")) spec.x_list.push_back(std::stod(t));
    if (spec.x_list.empty()) spec.x_list = {100.0, 1000.0, 10000.0};

    TraceReport rep = verify_identity(spec);
    ReportDocument doc("trace-identity", cfg.digest());
    for (const auto& n : rep.hypothesis_notes) doc.add_note(n);
    if (!rep.config_ok) {
        doc.set_status(false, "tower fails the theorem hypotheses (configuration error)");
        doc.write(out_dir);
        log << "trace-identity: configuration error; hypothesis diagnostics:\n";
        for (const auto& n : rep.hypothesis_notes) log << "  " << n << "\n";
        return 2;
    }
    auto side_table = [&](const std::string& name, const std::vector<TraceRow>& rows) {
        doc.begin_table(name, {"entry", "hecke_trace", "hom_I", "contributes"});
        for (const auto& r : rows)
            doc.add_row({r.label, r.hecke_exact, std::to_string(r.hom_dim),
                         r.contributes ? "yes" : "no"});
    };
    side_table("lhs", rep.lhs_rows);
    side_table("rhs", rep.rhs_rows);
    doc.begin_table("totals", {"lhs_exact", "rhs_exact", "pole_order", "residue_factor",
                               "lhs_total", "rhs_total", "residual", "mode"});
    doc.add_row({rep.lhs_exact.to_string(), rep.rhs_exact.to_string(),
                 std::to_string(rep.pole_order), ReportDocument::format_double(rep.residue_factor),
                 ReportDocument::format_double(rep.lhs_total),
                 ReportDocument::format_double(rep.rhs_total),
                 ReportDocument::format_double(rep.residual),
                 rep.symbolic ? "symbolic" : "numeric"});
    doc.begin_table("fibers", {"lhs_entry", "fiber_count_at_F"});
    for (const auto& [label, count] : rep.fiber_counts)
        doc.add_row({label, std::to_string(count)});
    doc.begin_table("advisory_numeric", {"X", "normalized_ratio"});
    for (const auto& c : rep.numeric_columns)
        doc.add_row({ReportDocument::format_double(c[0]), ReportDocument::format_double(c[1])});
    doc.set_status(rep.pass, rep.pass ? "trace identity certified" : "trace identity FAILED");
    doc.write(out_dir);
    log << "trace-identity: residual " << ReportDocument::format_double(rep.residual) << " ("
        << (rep.pass ? "pass" : "FAIL") << ")\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int run_command(const std::string& command, const RunConfig& cfg, const std::string& out_dir,
                const std::string& fixture_dir, bool write_fixture, std::ostream& log) {
    try {
        if (command == "chartab") return cmd_chartab(cfg, out_dir, fixture_dir, write_fixture, log);
        if (command == "branch") return cmd_branch(cfg, out_dir, log);
        if (command == "fibers") return cmd_fibers(cfg, out_dir, log);
        if (command == "satake") return cmd_satake(cfg, out_dir, log);
        if (command == "smoothsum") return cmd_smoothsum(cfg, out_dir, log);
        if (command == "trace-identity") return cmd_trace_identity(cfg, out_dir, log);
        log << "error: unknown command " << command << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace icotrace
