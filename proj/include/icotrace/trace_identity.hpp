#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "icotrace/euler.hpp"
#include "icotrace/hecke.hpp"
#include "icotrace/kernel.hpp"
#include "icotrace/spectrum.hpp"

namespace icotrace {

// unramified Hecke insertion for a trace-identity scenario
struct HeckeInsertion {
    enum class Kind { None, EModulus, FprimePoly };
    Kind kind = Kind::None;
    // EModulus: f(m), m = prod pi_{w_i}^{j_i} with w_i the canonical place of
    // E above the listed stream primes (theorems 1 and 2; transfers are
    // b_{E/F'}(f) and b_{E/F}(f))
    struct EPart {
        long long q;
        int j;
    };
    std::vector<EPart> e_parts;
    // FprimePoly: the complete homogeneous polynomial h_m at the canonical
    // place of F' above q (theorem 3's S_1' insertion; the base-changed side
    // receives b_{F'/F}(h))
    long long fprime_q = 0;
    int fprime_m = 0;
    Rational scale = Rational(1);
};

struct ScenarioSpec {
    int theorem = 2;         // 1, 2 or 3
    char variant = 'A';      // theorem 2: 'A' or 'B'
    std::string tower_kind = "sl2z5";  // "sl2z5" or "sl2z7"
    std::string fprime = "a4tilde";    // "a4tilde" | "q8" (sl2z5); ignored for sl2z7
    int n = 2;
    int tau = -1;        // explicit element index, or -1 for first of tau_order
    int tau_order = 5;
    uint64_t stream_seed = 11;
    long long stream_bound = 100000;
    BumpKernel kernel{1.0, 0.5};
    HeckeInsertion insertion;
    std::vector<double> x_list{100.0, 1000.0, 10000.0};
};

struct TraceRow {
    std::string label;
    std::string hecke_exact;
    std::complex<double> hecke{0.0, 0.0};
    int hom_dim = 0;
    bool contributes = false;
};

struct TraceReport {
    bool config_ok = false;
    std::vector<std::string> hypothesis_notes;
    std::vector<TraceRow> lhs_rows, rhs_rows;
    // exact totals with the theorem prefactors, the (shared) residue factor
    // divided out
    Cyclotomic lhs_exact, rhs_exact;
    bool exact_equal = false;
    int pole_order = 0;
    double residue_factor = 0.0;  // c_{-k}/(k-1)! of the shared Euler data
    double lhs_total = 0.0, rhs_total = 0.0;
    double residual = 1.0;
    bool symbolic = true;  // both sides share one residue profile
    double tolerance = 1e-6;
    bool pass = false;
    // per-LHS-entry fiber count up to level F (the descent bookkeeping)
    std::vector<std::pair<std::string, int>> fiber_counts;
    // advisory numeric columns: {X, normalized smoothed sum / symbolic limit}
    std::vector<std::array<double, 2>> numeric_columns;
};

Tower build_scenario_tower(const ScenarioSpec& spec);

// compute both sides independently and certify equality
TraceReport verify_identity(const ScenarioSpec& spec);

// numeric probe of the nonvanishing conjecture: the entry's Rankin-Selberg
// data against a partner (default: itself, the untwisted pairing), pole
// order from hom_I, ratio of the smoothed sum to the residue term across the
// X list. A partner with Hom_I = 0 gives limit 0.
struct ProbeRow {
    double X;
    double smoothed;       // numeric smoothed sum
    double residue;        // residue_term at this X
    double ratio;          // smoothed / residue (0 when residue == 0)
};
struct ProbeReport {
    int hom_dim = 0;
    double margin = 0.0;  // |leading Laurent coefficient|, 0 for no pole
    std::vector<ProbeRow> rows;
};
ProbeReport conj_nonzero_probe(const Tower& tw, const std::string& entry_label,
                               const std::string& partner_label, const BumpKernel& kernel,
                               const std::vector<double>& x_list, uint64_t seed, long long bound);

}  // namespace icotrace
