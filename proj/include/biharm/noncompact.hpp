#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biharm/exact_int.hpp"
#include "biharm/smooth_function.hpp"

namespace biharm {

// φ: ℝ → S² with phase A(γ) = aγ³ + bγ² + cγ + d.
struct CubicPhase {
    ExactRational a;
    ExactRational b;
    ExactRational c;
    ExactRational d;

    // Throws NotProper when a = b = 0.
    void validate() const;

    // A′, A″, A‴ in double precision.
    double d1(double x) const;
    double d2(double x) const;
    double d3(double x) const;
};

enum class Stability { Stable, NotCertified };

std::string to_string(Stability s);

// Stable iff a = 0 or b² − 3ac ≤ 0.
Stability is_strictly_stable(const CubicPhase& phase);

// (A″)² + 2A‴A′ = 72a²γ² + 48abγ + 4b² + 12ac
ExactRational stability_integrand(const CubicPhase& phase, const ExactRational& gamma);
// −4(b² − 3ac) for a ≠ 0, 4b² for a = 0.
ExactRational integrand_min(const CubicPhase& phase);

// V = f₁V_Y + f₂V_η
struct SectionPair {
    SmoothFunction f1;
    SmoothFunction f2;

    std::vector<double> breakpoints() const;
};

// ∫ (f₁″)² + (f₂″ + A′²f₂)² + ((A″)² + 2A‴A′)f₂²
double hessian_form(const CubicPhase& phase, const SectionPair& v);

// Components of I₂(V) along V_Y and V_η.
struct I2Value {
    double y{0.0};
    double eta{0.0};
};

I2Value i2_sections(const CubicPhase& phase, const SectionPair& v, double gamma);
std::vector<I2Value> i2_sections(const CubicPhase& phase, const SectionPair& v, const std::vector<double>& grid);

// ∫ ⟨I₂(V), V⟩ before integrating by parts.
double i2_pairing(const CubicPhase& phase, const SectionPair& v);

// A = γ³ − 2γ with f₁ = 0, f₂ = cos⁶γ on [−π/2, π/2].
CubicPhase counterexample_phase();
SectionPair counterexample_section();
double counterexample_value();

struct InstabilityWitness {
    SectionPair section;
    double hessian{0.0};
    double center{0.0};
    double half_width{0.0};
};

// Best-effort search over cos⁶ bumps in the V_η direction near the
// minimizer of (A″)² + 2A‴A′; returns the most negative Hessian found.
std::optional<InstabilityWitness> find_instability_witness(const CubicPhase& phase);

}  // namespace biharm
