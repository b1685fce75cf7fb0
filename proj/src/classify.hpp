#pragma once

#include <optional>
#include <string>

#include "e7.hpp"

namespace tg {

struct FamilyParams {
    int family = 1;               // 1..7
    std::vector<Rat> lambdas;     // semisimple parameters, family-specific count
    int nilpotent_id = -1;        // optional catalog index
};

struct ConstraintCheck {
    bool ok = true;
    std::vector<std::string> violated;
    // Family 1 only: the two readings of the degree-mismatched third constraint.
    bool third_printed_ok = true;
    bool third_homogeneous_ok = true;
    bool third_disagree = false;
};
ConstraintCheck check_family_params(const FamilyParams& p);

// The stated linear combination of the basic elements (semisimple part only).
Bracket canonical_semisimple(const FamilyParams& p);

// The nilpotent parts printed for families 3, 4 (component pool) and 6.
std::vector<Bracket> nilpotent_catalog(int family);

struct GradedKernelDims {
    int dm1 = 0, d0 = 0, d1 = 0;
    bool operator==(const GradedKernelDims& o) const { return dm1 == o.dm1 && d0 == o.d0 && d1 == o.d1; }
};

// Kernels of the cubic action per grade block.
GradedKernelDims graded_kernel_dims(const Bracket& l);
// Stable kernels (= kernels of the semisimple part per grade block).
GradedKernelDims stable_graded_kernel_dims(const Bracket& l);

// dim ker sigma(l)^3|_W == 3, the genericity criterion.
bool is_generic(const Bracket& l);

struct InvariantTriple {
    Rat x, y, z;
    bool operator==(const InvariantTriple& o) const { return x == o.x && y == o.y && z == o.z; }
};

struct ClassificationReport {
    int family = 0;  // 1..7; 0 = undetermined
    bool family1_excluded = false;
    bool in_U = false;
    GradedKernelDims dims;
    std::optional<bool> semisimple;
    std::optional<InvariantTriple> invariants;
    Mode mode = Mode::exact;
    std::string diagnostic;
    double gap_ratio = 0.0;  // approx mode: smallest accepted pivot over the cut
};

struct ClassifyOptions {
    double tol = 1e-9;
    bool semisimple_flag = true;  // the flag needs characteristic polynomials; family routing does not
};

ClassificationReport classify(const Bracket& l, const ClassifyOptions& opts = {});

// Canonical orbit representative recovered from the spectral dictionary.
std::optional<InvariantTriple> orbit_invariants(const Bracket& l);

// Monomial Weyl-group elements: coordinate i receives omega^exp[i] * v[src[i]].
struct GwElement {
    std::array<int, 3> src{0, 1, 2};
    std::array<int, 3> exp{0, 0, 0};
    bool operator<(const GwElement& o) const {
        if (src != o.src) return src < o.src;
        return exp < o.exp;
    }
};

struct WeylGroupGW {
    bool complex_mode = true;
    std::vector<GwElement> elements;
    int order() const { return static_cast<int>(elements.size()); }
};

const WeylGroupGW& weyl_group_gw(bool complex_mode = true);

// Image of a rational triple when it stays rational (all twists hit zeros).
std::optional<InvariantTriple> gw_apply_real(const GwElement& g, const InvariantTriple& v);

// Unique normalized representative of a generic bracket: scale to x - z = 1,
// minimal |y|, then |x|, then |z| over the real orbit.
Bracket normalize_unique(const Bracket& l);

std::vector<Bracket> sample_orbit(const FamilyParams& p, int n, std::uint64_t seed);

// Printed stabilizer maps with the elements they must fix.
struct StabilizerFixture {
    std::string name;
    SAction map;
    std::vector<Bracket> fixes;
};
std::vector<StabilizerFixture> stabilizer_catalog();

SAction family2_deformation(const Rat& x);
SAction family3_deformation(const Rat& x);

// S'-realizations of the coordinate transpositions acting on the u-span.
SAction gw_witness_swap_xy();
SAction gw_witness_swap_xz();

}  // namespace tg
