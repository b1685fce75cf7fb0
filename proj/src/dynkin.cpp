#include "dynkin.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace tg {

std::string type_name(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        case LieType::E6: return "E6";
        case LieType::E7: return "E7";
        case LieType::E8: return "E8";
        case LieType::F4: return "F4";
        case LieType::G2: return "G2";
    }
    return "?";
}

LieType parse_type(const std::string& s) {
    if (s == "A") return LieType::A;
    if (s == "B") return LieType::B;
    if (s == "C") return LieType::C;
    if (s == "D") return LieType::D;
    if (s == "E6") return LieType::E6;
    if (s == "E7") return LieType::E7;
    if (s == "E8") return LieType::E8;
    if (s == "F4") return LieType::F4;
    if (s == "G2") return LieType::G2;
    throw param_error("unknown Lie type: '" + s + "'");
}

namespace {

int fixed_rank(LieType t) {
    switch (t) {
        case LieType::E6: return 6;
        case LieType::E7: return 7;
        case LieType::E8: return 8;
        case LieType::F4: return 4;
        case LieType::G2: return 2;
        default: return 0;
    }
}

std::vector<std::vector<int>> cartan_matrix(LieType t, int n) {
    auto bad = [&]() { return param_error("invalid rank " + std::to_string(n) + " for type " + type_name(t)); };
    if (n < 1) throw bad();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };  // 0-based
    switch (t) {
        case LieType::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case LieType::B:
            if (n < 2) throw bad();
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;  // last node short
            break;
        case LieType::C:
            if (n < 2) throw bad();
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;  // last node long
            break;
        case LieType::D:
            if (n < 4) throw bad();
            for (int i = 0; i + 1 < n - 2; ++i) edge(i, i + 1);
            edge(n - 3, n - 2);
            edge(n - 3, n - 1);
            break;
        case LieType::E6:
        case LieType::E7:
        case LieType::E8: {
            if (n != fixed_rank(t)) throw bad();
            // chain 1-3-4-...-n with node 2 attached to node 4 (1-based)
            edge(0, 2);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        }
        case LieType::F4:
            if (n != 4) throw bad();
            edge(0, 1);
            edge(2, 3);
            c[1][2] = -1;
            c[2][1] = -2;  // nodes 3,4 short
            break;
        case LieType::G2:
            if (n != 2) throw bad();
            c[0][1] = -3;
            c[1][0] = -1;  // node 1 short
            break;
    }
    return c;
}

RootSystem build_root_system(LieType t, int n) {
    RootSystem rs;
    rs.type = t;
    rs.rank = n;
    rs.cartan = cartan_matrix(t, n);
    std::set<std::vector<int>> pos;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& r : frontier)
            for (int i = 0; i < n; ++i) {
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += rs.cartan[i][j] * r[j];
                std::vector<int> img = r;
                img[i] -= pairing;
                bool positive = true;
                for (int v : img)
                    if (v < 0) positive = false;
                if (positive && pos.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    rs.positive_roots.assign(pos.begin(), pos.end());
    rs.two_rho.assign(n, 0);
    int best_height = -1;
    for (const auto& r : rs.positive_roots) {
        int h = 0;
        for (int i = 0; i < n; ++i) {
            rs.two_rho[i] += r[i];
            h += r[i];
        }
        if (h > best_height) {
            best_height = h;
            rs.highest_root = r;
        }
    }
    return rs;
}

}  // namespace

const RootSystem& root_system(LieType type, int rank) {
    static std::map<std::pair<int, int>, RootSystem> cache;
    auto key = std::make_pair(static_cast<int>(type), rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_root_system(type, rank)).first;
    return it->second;
}

std::vector<int> highest_root_coeffs(LieType type, int rank) { return root_system(type, rank).highest_root; }

CrossedDiagram parse_diagram(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw param_error("diagram syntax is TYPE<rank>:x<nodes>, e.g. D4:x34");
    std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    size_t letters_end = 0;
    while (letters_end < head.size() && !std::isdigit(static_cast<unsigned char>(head[letters_end]))) ++letters_end;
    std::string letters = head.substr(0, letters_end), rank_str = head.substr(letters_end);
    if (letters.empty() || rank_str.empty()) throw param_error("diagram syntax: bad type/rank in '" + s + "'");
    CrossedDiagram d;
    if (letters == "E" || letters == "F" || letters == "G")
        d.type = parse_type(letters + rank_str);
    else
        d.type = parse_type(letters);
    d.rank = std::stoi(rank_str);
    if (int fr = fixed_rank(d.type); fr && fr != d.rank) throw param_error("rank mismatch in '" + s + "'");
    if (tail.empty() || tail[0] != 'x') throw param_error("diagram syntax: missing crossed list in '" + s + "'");
    if (tail.size() == 1) throw param_error("crossed set must be nonempty");
    for (size_t i = 1; i < tail.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tail[i]))) throw param_error("bad crossed node in '" + s + "'");
        int node = tail[i] - '0';
        if (node < 1 || node > d.rank) throw param_error("crossed node out of range in '" + s + "'");
        d.crossed.push_back(node);
    }
    std::sort(d.crossed.begin(), d.crossed.end());
    d.crossed.erase(std::unique(d.crossed.begin(), d.crossed.end()), d.crossed.end());
    root_system(d.type, d.rank);  // validates the rank
    return d;
}

std::string diagram_str(const CrossedDiagram& d) {
    std::ostringstream os;
    std::string tn = type_name(d.type);
    os << tn;
    if (tn.size() == 1) os << d.rank;
    os << ":x";
    for (int c : d.crossed) os << c;
    return os.str();
}

namespace {

int sigma_height(const CrossedDiagram& d, const std::vector<int>& root) {
    int h = 0;
    for (int c : d.crossed) h += root[c - 1];
    return h;
}

// Connected components of the uncrossed subdiagram, classified by shape.
std::string reductive_descriptor(const CrossedDiagram& d) {
    const RootSystem& rs = root_system(d.type, d.rank);
    int n = d.rank;
    std::vector<bool> crossed(n, false);
    for (int c : d.crossed) crossed[c - 1] = true;
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        if (crossed[i] || comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (!crossed[j] && comp[j] < 0 && v != j && rs.cartan[v][j] != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<std::string> parts;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> nodes;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) nodes.push_back(i);
        int sz = static_cast<int>(nodes.size());
        int doubles = 0, triples = 0, branch = 0;
        for (int a : nodes) {
            int deg = 0;
            for (int b : nodes)
                if (a != b && rs.cartan[a][b] != 0) {
                    ++deg;
                    int bond = rs.cartan[a][b] * rs.cartan[b][a];
                    if (bond == 2) ++doubles;
                    if (bond == 3) ++triples;
                }
            if (deg >= 3) ++branch;
        }
        doubles /= 2;
        triples /= 2;
        std::string label;
        if (triples)
            label = "G2";
        else if (doubles == 2)
            label = "F4";
        else if (doubles == 1) {
            // B if the short end of the bond is a leaf, else C
            bool is_b = false;
            for (int a : nodes)
                for (int b : nodes)
                    if (a != b && rs.cartan[a][b] == -2) {
                        int deg = 0;
                        for (int e : nodes)
                            if (e != a && rs.cartan[a][e] != 0) ++deg;
                        if (deg == 1) is_b = true;
                    }
            label = (is_b ? "B" : "C") + std::to_string(sz);
        } else if (branch) {
            // D has two leaves adjacent to the branch node, E at most one
            int leaf_neighbors = 0;
            for (int a : nodes) {
                int deg = 0;
                for (int b : nodes)
                    if (a != b && rs.cartan[a][b] != 0) ++deg;
                if (deg < 3) continue;
                for (int b : nodes) {
                    if (a == b || rs.cartan[a][b] == 0) continue;
                    int bdeg = 0;
                    for (int e : nodes)
                        if (e != b && rs.cartan[b][e] != 0) ++bdeg;
                    if (bdeg == 1) ++leaf_neighbors;
                }
            }
            label = (leaf_neighbors >= 2 ? "D" : "E") + std::to_string(sz);
        } else
            label = "A" + std::to_string(sz);
        parts.push_back(label);
    }
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    os << "gl(1)^" << d.crossed.size();
    for (const auto& p : parts) os << " + " << p;
    return os.str();
}

}  // namespace

int grading_depth(const CrossedDiagram& d) {
    const RootSystem& rs = root_system(d.type, d.rank);
    return sigma_height(d, rs.highest_root);
}

GradingInfo graded_dims(const CrossedDiagram& d) {
    const RootSystem& rs = root_system(d.type, d.rank);
    GradingInfo info;
    info.depth = grading_depth(d);
    info.dims[0] = d.rank;  // torus
    for (const auto& r : rs.positive_roots) {
        int h = sigma_height(d, r);
        if (h > 0) {
            info.dims[h] += 1;
            info.dims[-h] += 1;
        } else {
            info.dims[0] += 2;
        }
    }
    info.g0_descriptor = reductive_descriptor(d);
    return info;
}

std::vector<CrossedDiagram> enumerate_two_graded(LieType type, int rank) {
    const RootSystem& rs = root_system(type, rank);
    const auto& m = rs.highest_root;
    std::vector<CrossedDiagram> out;
    for (int i = 1; i <= rank; ++i)
        if (m[i - 1] == 2) out.push_back({type, rank, {i}});
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            if (m[i - 1] == 1 && m[j - 1] == 1) out.push_back({type, rank, {i, j}});
    return out;
}

std::vector<CohomologyComponent> kostant_components(const CrossedDiagram& d, int degree) {
    if (degree != 1 && degree != 2) throw param_error("cohomology degree must be 1 or 2");
    const RootSystem& rs = root_system(d.type, d.rank);
    int n = d.rank;
    std::vector<bool> in_sigma(n + 1, false);
    for (int c : d.crossed) in_sigma[c] = true;

    // 2(theta + rho): the affine action stays integral in doubled coordinates.
    std::vector<long> base(n);
    for (int i = 0; i < n; ++i) base[i] = 2L * rs.highest_root[i] + rs.two_rho[i];
    auto reflect = [&](std::vector<long>& v, int i /*1-based*/) {
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += rs.cartan[i - 1][j] * v[j];
        v[i - 1] -= pairing;
    };
    auto component_for = [&](std::vector<int> word) {
        std::vector<long> v = base;
        for (auto it = word.rbegin(); it != word.rend(); ++it) reflect(v, *it);
        CohomologyComponent comp;
        comp.degree = degree;
        comp.weyl_word = std::move(word);
        comp.weight.resize(n);
        long hom2 = 0;
        for (int i = 0; i < n; ++i) {
            long mu2 = v[i] - rs.two_rho[i];
            assert(mu2 % 2 == 0);
            comp.weight[i] = static_cast<int>(mu2 / 2);
            if (in_sigma[i + 1]) hom2 += mu2;
        }
        comp.homogeneity = static_cast<int>(-hom2 / 2);
        return comp;
    };

    std::vector<CohomologyComponent> out;
    if (degree == 1) {
        for (int c : d.crossed) out.push_back(component_for({c}));
        return out;
    }
    for (int i = 1; i <= n; ++i) {
        if (!in_sigma[i]) continue;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            // Phi_w = {alpha_i, s_i(alpha_j)}; the second root needs positive
            // crossed height, and commuting products are counted once.
            int ht = (in_sigma[j] ? 1 : 0) - rs.cartan[i - 1][j - 1];
            if (ht < 1) continue;
            if (rs.cartan[i - 1][j - 1] == 0 && in_sigma[j] && j < i) continue;
            out.push_back(component_for({i, j}));
        }
    }
    return out;
}

std::vector<int> homogeneities(const CrossedDiagram& d, int degree) {
    std::vector<int> h;
    for (const auto& c : kostant_components(d, degree)) h.push_back(c.homogeneity);
    std::sort(h.begin(), h.end(), std::greater<int>());
    return h;
}

bool is_contact(const CrossedDiagram& d) {
    GradingInfo info = graded_dims(d);
    auto it = info.dims.find(2);
    return info.depth == 2 && it != info.dims.end() && it->second == 1;
}

namespace {

bool crossed_is(const CrossedDiagram& d, std::initializer_list<int> nodes) {
    return d.crossed == std::vector<int>(nodes);
}

bool conformal_spin(const CrossedDiagram& d) {
    if (d.type != LieType::D) return false;
    int n = d.rank;
    if (crossed_is(d, {1, n - 1}) || crossed_is(d, {1, n})) return true;
    // rank 4: triality identifies the extremal pairs
    return n == 4 && crossed_is(d, {3, 4});
}

}  // namespace

bool h1_nonzero_hom0(const CrossedDiagram& d) {
    if (is_contact(d)) return true;
    if (d.type == LieType::A)
        for (int c : d.crossed)
            if (c == 1 || c == d.rank) return true;
    return false;
}

bool h2_missing_hom0(const CrossedDiagram& d) {
    if (is_contact(d)) return true;
    if (d.type == LieType::A && d.rank == 3 && (crossed_is(d, {1, 2}) || crossed_is(d, {2, 3}))) return true;
    if (d.type == LieType::A && d.rank == 4 && crossed_is(d, {2, 3})) return true;
    if (d.type == LieType::B && crossed_is(d, {d.rank})) return true;
    if (d.type == LieType::C && d.rank == 3 && crossed_is(d, {2})) return true;
    return false;
}

bool h2_not_concentrated_hom0(const CrossedDiagram& d) {
    if (h1_nonzero_hom0(d) || h2_missing_hom0(d)) return true;
    int n = d.rank;
    if (d.type == LieType::A) {
        for (int c : d.crossed)
            if (c == 2 || c == n - 1) return true;
        if (d.crossed.size() == 2 && d.crossed[1] == d.crossed[0] + 1) return true;
    }
    if (d.type == LieType::B && crossed_is(d, {3})) return true;
    if (d.type == LieType::C)
        for (int c : d.crossed)
            if (c == 2 || c == n - 1) return true;
    if (conformal_spin(d)) return true;
    if (d.type == LieType::D && crossed_is(d, {3})) return true;
    return false;
}

std::vector<SimpleEntry> simple_two_graded_entries(int max_corank, int max_rank) {
    std::vector<SimpleEntry> out;
    auto add = [&](int s, int r, const std::string& label) {
        if (s >= 1 && s <= max_corank && r >= 1 && r <= max_rank) out.push_back({s, r, label});
    };
    // two-block family: corank p*q, rank l*(p+q)
    for (int p = 2; p * 2 <= max_corank; ++p)
        for (int q = p; p * q <= max_corank; ++q)
            for (int l = 1; l * (p + q) <= max_rank; ++l) add(p * q, l * (p + q), "pq");
    // wedge-square family: corank t_n, rank l*n
    for (int n = 3; n * (n - 1) / 2 <= max_corank; ++n)
        for (int l = 1; l * n <= max_rank; ++l) add(n * (n - 1) / 2, l * n, "wedge");
    // symmetric-square family: corank t_{n+1}, rank 2l*n
    for (int n = 2; n * (n + 1) / 2 <= max_corank; ++n)
        for (int l = 1; 2 * l * n <= max_rank; ++l) add(n * (n + 1) / 2, 2 * l * n, "sym");
    add(7, 8, "spin7");
    add(8, 16, "spin8-pair");
    add(5, 20, "wedge5-pair");
    add(10, 32, "spin10-pair");
    add(7, 35, "wedge7");
    add(14, 64, "spin14");
    return out;
}

RankTable semisimple_sum_table(int max_corank, int max_rank) {
    if (max_corank > 30) throw param_error("corank bound exceeds the supported table size");
    RankTable t;
    t.max_corank = max_corank;
    t.max_rank = max_rank;
    t.achievable.assign(max_corank + 1, std::vector<char>(max_rank + 1, 0));
    auto singles = simple_two_graded_entries(max_corank, max_rank);
    for (const auto& e : singles) t.achievable[e.corank][e.rank] = 1;
    for (int s = 1; s <= max_corank; ++s)
        for (int r = 1; r <= max_rank; ++r) {
            if (t.achievable[s][r]) continue;
            for (const auto& e : singles) {
                if (e.corank >= s || e.rank >= r) continue;
                if (t.achievable[s - e.corank][r - e.rank]) {
                    t.achievable[s][r] = 1;
                    break;
                }
            }
        }
    return t;
}

std::vector<int> RankTable::ranks_for(int corank) const {
    std::vector<int> out;
    for (int r = 1; r <= max_rank; ++r)
        if (achievable[corank][r]) out.push_back(r);
    return out;
}

}  // namespace tg
