// Copyright 2026 The mgh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgh/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "mgh/circuits.hpp"
#include "mgh/hierarchy.hpp"
#include "mgh/majorana.hpp"
#include "mgh/random.hpp"
#include "mgh/svn.hpp"
#include "mgh/teleport.hpp"

namespace mgh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStrict = 1e-12;
constexpr double kLoose = 1e-9;

struct PlantedGate {
    Operator u = Operator::identity(2);
    Parity parity = Parity::Even;
    double phi = 0.0;
};

// Cycles through k = 2..6, alternating parity, so every root of unity appears
// for both parities at the largest k.
std::vector<PlantedGate> planted_corpus(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<PlantedGate> out;
    for (int i = 0; i < count; ++i) {
        const int k = 2 + i % 5;
        const int t = i / 5;
        const Parity p = (t % 2 == 0) ? Parity::Even : Parity::Odd;
        const int roots = 1 << (k - 2);
        const int j = (t / 2) % roots;
        const double phi = kTwoPi * j / roots;
        out.push_back({planted_two_qubit(p, phi, rng), p, phi});
    }
    return out;
}

std::size_t count_distinct(std::vector<double> v, double tol) {
    std::sort(v.begin(), v.end());
    std::size_t n = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == 0 || v[i] - v[i - 1] > tol) {
            ++n;
        }
    }
    return n;
}

Operator level_two_source(Parity p, int level, Rng& rng) {
    return planted_two_qubit(p, kTwoPi / std::ldexp(1.0, level - 2), rng);
}

Pattern random_pattern(int n, int fixed, Rng& rng) {
    Pattern y(static_cast<std::size_t>(n), Trit::Star);
    std::vector<int> wires(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        wires[static_cast<std::size_t>(i)] = i;
    }
    std::shuffle(wires.begin(), wires.end(), rng);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < fixed; ++i) {
        y[static_cast<std::size_t>(wires[static_cast<std::size_t>(i)])] = coin(rng) ? Trit::One : Trit::Zero;
    }
    return y;
}

std::vector<Pattern> all_patterns(int n) {
    std::vector<Pattern> out;
    int total = 1;
    for (int i = 0; i < n; ++i) {
        total *= 3;
    }
    for (int code = 0; code < total; ++code) {
        Pattern y;
        int rest = code;
        for (int i = 0; i < n; ++i) {
            y.push_back(static_cast<Trit>(rest % 3));
            rest /= 3;
        }
        if (pattern_length(y) > 0) {
            out.push_back(y);
        }
    }
    return out;
}

double parity_residual(const StateVector& psi, Parity p) {
    const double sign = (p == Parity::Odd) ? -1.0 : 1.0;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        const double z = (std::popcount(static_cast<std::uint64_t>(i)) % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs((z - sign) * psi[i]));
    }
    return worst;
}

struct TeleportTally {
    double max_prob_dev = 0.0;
    double max_residual = 0.0;
    std::size_t branches = 0;
};

void teleport_trials(const Operator& u, int trials, Rng& rng, TeleportTally& tally) {
    for (int t = 0; t < trials; ++t) {
        const TeleportTranscript tr = simulate_protocol(u, random_state(u.n_qubits(), rng));
        tally.max_prob_dev = std::max(tally.max_prob_dev, tr.max_probability_deviation());
        tally.max_residual = std::max(tally.max_residual, tr.max_residual());
        tally.branches += tr.branches.size();
    }
}

std::vector<std::pair<std::string, Operator>> teleport_two_gates(Rng& rng) {
    return {
        {"I", Operator::identity(2)},
        {"SWAP", named_gate("SWAP")},
        {"CZ", named_gate("CZ")},
        {"CPHASE(pi/2)", controlled_phase(std::numbers::pi / 2.0)},
        {"random matchgate", random_matchgate(rng)},
        {"random level-4", level_two_source(Parity::Even, 4, rng)},
    };
}

std::vector<std::pair<std::string, Operator>> teleport_three_gates() {
    return {
        {"FSWAP(1,3)", fermionic_swap(1, 3, 3)},
        {"F(1,*,1)", build_F(parse_pattern("1,*,1"))},
    };
}

CriterionResult make(int id, std::string title, bool pass, std::string detail) {
    return {id, std::move(title), pass, std::move(detail)};
}

}  // namespace

CriterionResult criterion_car(std::uint64_t /*seed*/) {
    Tolerances tol;
    tol.residual = kStrict;
    tol.unitary = kStrict;
    double worst = 0.0;
    bool odd = true;
    for (int n = 1; n <= 5; ++n) {
        const CarSet s = jw_set(n);
        const CarReport r = check_car(s, tol);
        worst = std::max({worst, r.max_residual, r.hermitian_residual, r.unitary_residual});
        for (const Operator& c : s.ops) {
            odd = odd && max_abs(parity_decompose(c).even.matrix()) < kStrict;
        }
    }
    return make(1, "CAR relations, n = 1..5", worst < kStrict && odd,
                fmt::format("max residual {:.2e}, all odd: {}", worst, odd));
}

CriterionResult criterion_gaussian_equivalence(std::uint64_t seed) {
    Rng rng(seed ^ 0x2);
    std::uniform_int_distribution<int> depth(1, 30);
    int ok = 0;
    double worst_ortho = 0.0;
    double worst_det = 0.0;
    double worst_diff = 0.0;
    const int total = 100;
    for (int i = 0; i < total; ++i) {
        const int n = (i % 2 == 0) ? 3 : 4;
        const CircuitIR c = random_matchgate_circuit(n, depth(rng), rng);
        const Operator u = circuit_to_operator(c);
        const auto r = extract_rotation(u);
        if (!r) {
            continue;
        }
        const double ortho = (*r * r->transpose() - RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
        const double det = std::abs(r->determinant() - 1.0);
        const double diff = (*r - circuit_to_rotation(c)).cwiseAbs().maxCoeff();
        worst_ortho = std::max(worst_ortho, ortho);
        worst_det = std::max(worst_det, det);
        worst_diff = std::max(worst_diff, diff);
        if (ortho < kLoose && det < kLoose && diff < kLoose && is_gaussian_lambda(u)) {
            ++ok;
        }
    }
    const bool swap_rejected = !is_gaussian_lambda(named_gate("SWAP"));
    const bool magic_rejected = !magic_state(named_gate("SWAP")).is_gaussian;
    return make(2, "Gaussian equivalence on random matchgate circuits",
                ok == total && swap_rejected && magic_rejected,
                fmt::format("{}/{} circuits; orthogonality {:.2e}, |det-1| {:.2e}, vs composed {:.2e}; "
                            "SWAP rejected: {}, M_SWAP rejected: {}",
                            ok, total, worst_ortho, worst_det, worst_diff, swap_rejected, magic_rejected));
}

CriterionResult criterion_canonical_levels(std::uint64_t /*seed*/) {
    std::vector<std::string> failures;
    int checked = 0;
    auto expect = [&](const std::string& label, const Operator& u, int level) {
        ++checked;
        const auto got = min_level(u);
        if (!got || *got != level) {
            failures.push_back(fmt::format("{} -> {} (want {})", label, got ? std::to_string(*got) : "none", level));
        }
    };
    expect("SWAP", named_gate("SWAP"), 3);
    expect("CZ", named_gate("CZ"), 3);
    for (int k = 3; k <= 6; ++k) {
        expect(fmt::format("CPHASE(2pi/{})", 1 << (k - 2)), controlled_phase(kTwoPi / std::ldexp(1.0, k - 2)), k);
    }
    for (int n = 2; n <= 3; ++n) {
        for (int mu = 1; mu <= 2 * n; ++mu) {
            expect(fmt::format("c_{} (n={})", mu, n), jw_majorana(n, mu), 1);
        }
    }
    expect("F(1,*,1)", build_F(parse_pattern("1,*,1")), 3);
    expect("FSWAP(1,3)", fermionic_swap(1, 3, 3), 3);
    for (const Pattern& y : all_patterns(3)) {
        expect("F(" + pattern_to_string(y) + ")", build_F(y), pattern_length(y) + 1);
    }
    std::string detail = fmt::format("{}/{} levels exact", checked - static_cast<int>(failures.size()), checked);
    for (const std::string& f : failures) {
        detail += "; " + f;
    }
    return make(3, "canonical levels", failures.empty(), detail);
}

CriterionResult criterion_closed_form(std::uint64_t seed) {
    const auto corpus = planted_corpus(seed ^ 0x4, 200);
    int agree = 0;
    for (const PlantedGate& g : corpus) {
        const auto closed = two_qubit_min_level(g.u).level;
        const auto recursive = min_level(g.u);
        if (closed && recursive && *closed == *recursive) {
            ++agree;
        }
    }
    return make(4, "two-qubit closed form matches recursion", agree == static_cast<int>(corpus.size()),
                fmt::format("{}/{} planted gates agree", agree, corpus.size()));
}

CriterionResult criterion_equivalence_classes(std::uint64_t seed) {
    const auto corpus = planted_corpus(seed ^ 0x4, 200);
    std::vector<int> levels;
    std::vector<double> phis;
    for (const PlantedGate& g : corpus) {
        const TwoQubitLevel l = two_qubit_min_level(g.u);
        levels.push_back(l.level.value_or(1000));
        phis.push_back(l.phi);
    }
    bool pass = true;
    std::string detail;
    for (int k = 3; k <= 6; ++k) {
        std::vector<double> generalised;
        std::vector<double> even;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (levels[i] > k) {
                continue;
            }
            // Snap phases near 2pi back to 0 so they dedupe with it.
            const double phi = (kTwoPi - phis[i] < kDefaultAngleTol) ? 0.0 : phis[i];
            generalised.push_back(std::min(phi, kTwoPi - phi));
            if (corpus[i].parity == Parity::Even) {
                even.push_back(phi);
            }
        }
        const std::size_t g = count_distinct(generalised, kDefaultAngleTol);
        const std::size_t e = count_distinct(even, kDefaultAngleTol);
        const std::size_t want_g = (std::size_t{1} << (k - 3)) + 1;
        const std::size_t want_e = std::size_t{1} << (k - 2);
        pass = pass && g == want_g && e == want_e;
        detail += fmt::format("{}k={}: {} generalised (want {}), {} even (want {})", detail.empty() ? "" : "; ", k, g,
                              want_g, e, want_e);
    }
    return make(5, "equivalence class counts", pass, detail);
}

CriterionResult criterion_teleport_two(std::uint64_t seed) {
    Rng rng(seed ^ 0x6);
    TeleportTally tally;
    for (const auto& [label, u] : teleport_two_gates(rng)) {
        teleport_trials(u, 5, rng, tally);
    }
    // Identity gate on basis inputs: every raw branch is a signed, shifted basis state.
    int sign_ok = 0;
    for (int x = 0; x <= 1; ++x) {
        for (int y = 0; y <= 1; ++y) {
            const TeleportTranscript tr =
                simulate_protocol(Operator::identity(2), StateVector::basis(2, static_cast<std::uint64_t>(2 * x + y)));
            for (const Branch& b : tr.branches) {
                const int z1 = outcome_bit(b.z, 1, 2);
                const int z2 = outcome_bit(b.z, 2, 2);
                const int z3 = outcome_bit(b.z, 3, 2);
                const int z4 = outcome_bit(b.z, 4, 2);
                const int expo = x * z1 + y * z3 + x * (z3 + z4) + (z1 + z2) * (z3 + z4);
                const std::uint64_t idx = static_cast<std::uint64_t>(((x + z1 + z2) % 2) * 2 + (y + z3 + z4) % 2);
                const Vector expected = StateVector::basis(2, idx).amplitudes() * (expo % 2 == 0 ? 0.25 : -0.25);
                const Vector raw = b.raw_state.amplitudes() * std::sqrt(b.probability);
                if (max_abs(raw - expected) < kStrict) {
                    ++sign_ok;
                }
            }
        }
    }
    const bool pass = tally.max_prob_dev < kStrict && tally.max_residual < kLoose && sign_ok == 64;
    return make(6, "teleportation, two qubits", pass,
                fmt::format("{} branches; probability deviation {:.2e}, corrected residual {:.2e}; "
                            "basis sign formula {}/64",
                            tally.branches, tally.max_prob_dev, tally.max_residual, sign_ok));
}

CriterionResult criterion_teleport_three(std::uint64_t seed) {
    Rng rng(seed ^ 0x7);
    TeleportTally tally;
    for (const auto& [label, u] : teleport_three_gates()) {
        teleport_trials(u, 5, rng, tally);
    }
    const bool pass = tally.max_prob_dev < kStrict && tally.max_residual < kLoose && tally.branches == 2 * 5 * 64;
    return make(7, "teleportation, three qubits", pass,
                fmt::format("{} branches; probability deviation {:.2e}, corrected residual {:.2e}", tally.branches,
                            tally.max_prob_dev, tally.max_residual));
}

CriterionResult criterion_magic_parity(std::uint64_t seed) {
    Rng rng(seed ^ 0x6);
    auto gates = teleport_two_gates(rng);
    for (auto& g : teleport_three_gates()) {
        gates.push_back(std::move(g));
    }
    double worst = 0.0;
    for (const auto& [label, u] : gates) {
        const MagicState m = magic_state(u, label);
        worst = std::max(worst, parity_residual(m.psi, m.parity));
    }
    return make(8, "magic-state parity", worst < kStrict,
                fmt::format("{} magic states, max residual {:.2e}", gates.size(), worst));
}

CriterionResult criterion_svn(std::uint64_t seed) {
    Rng rng(seed ^ 0x9);
    int round_trip = 0;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i % 2;
        const Operator v = random_fermionic_unitary(n, (i / 2) % 2 == 1, rng);
        const SvnResult r = svn_reconstruct(conjugated_tuple(v));
        const PhaseMatch pm = equal_up_to_phase(r.u, v);
        worst = std::max(worst, pm.residual);
        if (pm.equal && pm.residual < 1e-8) {
            ++round_trip;
        }
    }

    // Sources whose adjoints sit at the same level: two-qubit gates and Hermitian pattern gates.
    std::vector<std::pair<Operator, int>> sources;
    for (int level = 2; level <= 5; ++level) {
        for (int rep = 0; rep < 3; ++rep) {
            sources.emplace_back(level_two_source(rep % 2 == 0 ? Parity::Even : Parity::Odd, level, rng), level);
        }
    }
    for (const Pattern& y : all_patterns(3)) {
        sources.emplace_back(build_F(y), pattern_length(y) + 1);
    }
    int hierarchical = 0;
    for (const auto& [v, level] : sources) {
        const CarSet d = conjugated_tuple(v);
        bool tuple_ok = true;
        for (const Operator& op : d.ops) {
            tuple_ok = tuple_ok && parity_of(op) == Parity::Odd && level_membership(op, level - 1);
        }
        const SvnResult r = svn_reconstruct(d);
        if (tuple_ok && r.max_residual() < kLoose && level_membership(r.u, level) &&
            level_membership(r.u.adjoint(), level)) {
            ++hierarchical;
        }
    }
    const bool pass = round_trip == 50 && hierarchical == static_cast<int>(sources.size());
    return make(9, "Stone-von Neumann reconstruction", pass,
                fmt::format("round trip {}/50 (max residual {:.2e}); hierarchical {}/{}", round_trip, worst,
                            hierarchical, sources.size()));
}

CriterionResult criterion_closure(std::uint64_t seed) {
    Rng rng(seed ^ 0xA);
    constexpr int kInstances = 50;
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    struct Source {
        Operator u;
        int level;
    };
    auto make_source = [&](int i) -> Source {
        switch (i % 6) {
            case 0:
            case 1:
            case 2: {
                const int level = 2 + i % 6;
                return {level_two_source(i % 4 < 2 ? Parity::Even : Parity::Odd, level, rng), level};
            }
            case 3:
                return {circuit_to_operator(random_matchgate_circuit(3, 12, rng)), 2};
            case 4: {
                // A matchgate circuit on the left keeps a third-level gate in place; on the right it need not.
                const Operator left = circuit_to_operator(random_matchgate_circuit(3, 8, rng));
                return {left * build_F(random_pattern(3, 2, rng)), 3};
            }
            default: {
                std::uniform_int_distribution<MonomialMask> pick_mask(0, (MonomialMask{1} << 6) - 1);
                return {majorana_monomial(3, pick_mask(rng)) * build_F(random_pattern(3, 3, rng)), 4};
            }
        }
    };

    int sources_ok = 0;
    int phase_ok = 0;
    int right_ok = 0;
    int left_ok = 0;
    int conj_ok = 0;
    int nested_ok = 0;
    for (int i = 0; i < kInstances; ++i) {
        const Source s = make_source(i);
        const int n = s.u.n_qubits();
        std::uniform_int_distribution<int> pick_mu(1, 2 * n);
        const Operator c = jw_majorana(n, pick_mu(rng));
        sources_ok += level_membership(s.u, s.level) ? 1 : 0;
        phase_ok += level_membership(std::exp(Complex{0.0, angle(rng)}) * s.u, s.level) ? 1 : 0;
        right_ok += level_membership(s.u * c, s.level) ? 1 : 0;
        left_ok += level_membership(c * s.u, s.level) ? 1 : 0;
        conj_ok += level_membership(c * s.u * c, s.level) ? 1 : 0;
        nested_ok += level_membership(s.u, s.level + 1) ? 1 : 0;
    }

    int tensor_ok = 0;
    for (int i = 0; i < kInstances; ++i) {
        const int level = 2 + i % 2;
        const Operator a = level_two_source(i % 4 < 2 ? Parity::Even : Parity::Odd, level, rng);
        const Operator b = level_two_source(i % 3 == 0 ? Parity::Odd : Parity::Even, level, rng);
        tensor_ok += level_membership(kron(a, b), level) ? 1 : 0;
    }

    int reflection_ok = 0;
    double reflection_worst = 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < kInstances; ++i) {
        const int n = 2 + i % 2;
        RealVector a(2 * n);
        RealVector b(2 * n);
        for (int mu = 0; mu < 2 * n; ++mu) {
            a(mu) = gauss(rng);
            b(mu) = gauss(rng);
        }
        a.normalize();
        b.normalize();
        Operator ga = Operator::zero(n);
        Operator gb = Operator::zero(n);
        for (int mu = 1; mu <= 2 * n; ++mu) {
            ga += Complex{a(mu - 1), 0.0} * jw_majorana(n, mu);
            gb += Complex{b(mu - 1), 0.0} * jw_majorana(n, mu);
        }
        const auto coeffs = first_level_coeffs(ga * gb * ga.adjoint());
        if (!coeffs) {
            continue;
        }
        const RealVector want = (2.0 * a * a.transpose() - RealMatrix::Identity(2 * n, 2 * n)) * b;
        const double r = (coeffs->a - want).cwiseAbs().maxCoeff();
        reflection_worst = std::max(reflection_worst, r);
        reflection_ok += r < kLoose ? 1 : 0;
    }

    const int all[] = {sources_ok, phase_ok, right_ok, left_ok, conj_ok, nested_ok, tensor_ok, reflection_ok};
    const bool pass = std::all_of(std::begin(all), std::end(all), [](int v) { return v == kInstances; });
    return make(10, "closure properties", pass,
                fmt::format("sources {0}/{8}, phase {1}/{8}, U c {2}/{8}, c U {3}/{8}, c U c {4}/{8}, "
                            "nesting {5}/{8}, tensor {6}/{8}, reflection {7}/{8} (max {9:.2e})",
                            sources_ok, phase_ok, right_ok, left_ok, conj_ok, nested_ok, tensor_ok, reflection_ok,
                            kInstances, reflection_worst));
}

const std::vector<CriterionFn>& acceptance_criteria() {
    static const std::vector<CriterionFn> kAll = {
        criterion_car,         criterion_gaussian_equivalence, criterion_canonical_levels, criterion_closed_form,
        criterion_equivalence_classes, criterion_teleport_two, criterion_teleport_three,  criterion_magic_parity,
        criterion_svn,         criterion_closure,
    };
    return kAll;
}

std::string format_result(const CriterionResult& r) {
    return fmt::format("[{}] {:>2}. {}: {}", r.pass ? "PASS" : "FAIL", r.id, r.title, r.detail);
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out) {
    std::vector<CriterionResult> results;
    for (const CriterionFn& fn : acceptance_criteria()) {
        CriterionResult r;
        try {
            r = fn(seed);
        } catch (const std::exception& e) {
            r = make(static_cast<int>(results.size()) + 1, "criterion", false, std::string("exception: ") + e.what());
        }
        out << format_result(r) << '\n';
        out.flush();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace mgh
