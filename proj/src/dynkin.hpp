#pragma once

#include <map>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace tg {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string type_name(LieType t);
LieType parse_type(const std::string& s);

struct RootSystem {
    LieType type;
    int rank;
    std::vector<std::vector<int>> cartan;          // C[i][j] = <alpha_j, alpha_i-coroot>
    std::vector<std::vector<int>> positive_roots;  // simple-root coefficient vectors
    std::vector<int> highest_root;
    std::vector<int> two_rho;                      // coordinates of 2*rho
};

const RootSystem& root_system(LieType type, int rank);

// Highest-root coefficients in Bourbaki node order (branch nodes last for D).
std::vector<int> highest_root_coeffs(LieType type, int rank);

struct CrossedDiagram {
    LieType type = LieType::A;
    int rank = 1;
    std::vector<int> crossed;  // 1-based node indices, sorted, nonempty
};

// Diagram syntax "D4:x34": type, rank, crossed node digits.
CrossedDiagram parse_diagram(const std::string& s);
std::string diagram_str(const CrossedDiagram& d);

int grading_depth(const CrossedDiagram& d);

struct GradingInfo {
    int depth = 0;
    std::map<int, int> dims;  // grade -> dimension, negative grades mirrored
    std::string g0_descriptor;
};
GradingInfo graded_dims(const CrossedDiagram& d);

std::vector<CrossedDiagram> enumerate_two_graded(LieType type, int rank);

struct CohomologyComponent {
    int degree = 1;
    int homogeneity = 0;
    std::vector<int> weyl_word;  // 1-based simple reflections, outermost first
    std::vector<int> weight;     // simple-root coordinates of w(theta+rho)-rho
};
std::vector<CohomologyComponent> kostant_components(const CrossedDiagram& d, int degree);
std::vector<int> homogeneities(const CrossedDiagram& d, int degree);  // sorted descending

bool is_contact(const CrossedDiagram& d);  // one-dimensional top grade

// Exception predicates of the three classification theorems.
bool h1_nonzero_hom0(const CrossedDiagram& d);
bool h2_missing_hom0(const CrossedDiagram& d);
bool h2_not_concentrated_hom0(const CrossedDiagram& d);

// Simple |2|-graded pairs with first cohomology vanishing in non-negative
// homogeneities, as closed-form (corank, rank) families within the bounds.
struct SimpleEntry {
    int corank;
    int rank;
    std::string label;
};
std::vector<SimpleEntry> simple_two_graded_entries(int max_corank, int max_rank);

struct RankTable {
    int max_corank = 0;
    int max_rank = 0;
    // achievable[s][r] for 1 <= s <= max_corank, 1 <= r <= max_rank
    std::vector<std::vector<char>> achievable;
    bool at(int corank, int rank) const { return achievable[corank][rank] != 0; }
    std::vector<int> ranks_for(int corank) const;
};
RankTable semisimple_sum_table(int max_corank, int max_rank);

}  // namespace tg
