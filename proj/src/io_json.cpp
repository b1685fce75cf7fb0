#include "io_json.hpp"

#include <set>
#include <sstream>
#include <cmath>

#include "json.hpp"

namespace tg {

using ordered_json = nlohmann::ordered_json;

Bracket bracket_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error_ex(std::string("bracket JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("mode") || !j.contains("entries"))
        throw schema_error("bracket JSON needs 'mode' and 'entries'");
    std::string mode = j["mode"].get<std::string>();
    if (mode != "exact" && mode != "approx") throw schema_error("mode must be 'exact' or 'approx'");
    if (!j["entries"].is_array()) throw schema_error("'entries' must be an array");
    Bracket b(mode == "exact" ? Mode::exact : Mode::approx);
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("I") || !e.contains("i") || !e.contains("j") || !e.contains("v"))
            throw schema_error("entry needs fields I, i, j, v");
        int I = e["I"].get<int>(), i = e["i"].get<int>(), jj = e["j"].get<int>();
        if (I < 1 || I > 3) throw schema_error("I out of range 1..3");
        if (i < 1 || i > 6 || jj < 1 || jj > 6) throw schema_error("i, j out of range 1..6");
        if (i == jj) throw schema_error("diagonal entry i = j is forbidden");
        if (i > jj) throw schema_error("entries must satisfy i < j");
        if (!seen.insert({I, i, jj}).second) throw schema_error("duplicate entry (I,i,j)");
        int idx = widx(I - 1, pair_index(i - 1, jj - 1));
        if (mode == "exact") {
            if (!e["v"].is_string()) throw schema_error("exact values must be rational strings");
            b.q()[idx] = parse_rat(e["v"].get<std::string>());
        } else {
            if (!e["v"].is_number()) throw schema_error("approx values must be numbers");
            b.d()[idx] = e["v"].get<double>();
        }
    }
    return b;
}

std::string bracket_to_json(const Bracket& b) {
    ordered_json j;
    j["mode"] = b.mode() == Mode::exact ? "exact" : "approx";
    j["entries"] = ordered_json::array();
    for (int I = 0; I < 3; ++I)
        for (int p = 0; p < kPairs; ++p) {
            auto [i, jj] = pair_of(p);
            ordered_json e;
            if (b.mode() == Mode::exact) {
                const Rat& v = b.q()[widx(I, p)];
                if (v == 0) continue;
                e["I"] = I + 1;
                e["i"] = i + 1;
                e["j"] = jj + 1;
                e["v"] = rat_str(v);
            } else {
                double v = b.d()[widx(I, p)];
                if (v == 0.0) continue;
                e["I"] = I + 1;
                e["i"] = i + 1;
                e["j"] = jj + 1;
                e["v"] = v;
            }
            j["entries"].push_back(std::move(e));
        }
    return j.dump() + "\n";
}

namespace {

const char* family_description(int family) {
    switch (family) {
        case 1: return "x u1 + y u2 + z u3, distinct nonzero cubes";
        case 2: return "lambda u2 + mu u3";
        case 3: return "lambda u1 + mu (u2 + u3)";
        case 4: return "lambda (u2 + u3)";
        case 5: return "lambda (u3 - u2)";
        case 6: return "lambda u1";
        case 7: return "nilpotent";
        default: return "undetermined";
    }
}

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
    ordered_json j;
    if (r.family >= 1)
        j["family"] = r.family;
    else
        j["family"] = nullptr;
    j["in_U"] = r.in_U;
    j["kernel_dims"] = {r.dims.dm1, r.dims.d0, r.dims.d1};
    if (r.semisimple.has_value())
        j["semisimple"] = *r.semisimple;
    else
        j["semisimple"] = nullptr;
    if (r.invariants) {
        ordered_json inv;
        inv["x"] = rat_str(r.invariants->x);
        inv["y"] = rat_str(r.invariants->y);
        inv["z"] = rat_str(r.invariants->z);
        j["invariants"] = std::move(inv);
    } else {
        j["invariants"] = nullptr;
    }
    j["mode"] = r.mode == Mode::exact ? "exact" : "approx";
    if (r.family == 0) {
        j["undetermined"] = true;
        j["diagnostic"] = r.diagnostic;
        if (r.mode == Mode::approx) j["gap_ratio"] = r.gap_ratio;
    }
    if (r.family1_excluded) j["family1_excluded"] = true;
    return j.dump() + "\n";
}

std::string report_to_text(const ClassificationReport& r) {
    std::ostringstream os;
    if (r.family >= 1) {
        os << "family " << r.family << " (" << family_description(r.family) << ")\n";
    } else {
        os << "family undetermined";
        if (!r.diagnostic.empty()) os << ": " << r.diagnostic;
        if (r.mode == Mode::approx) os << " [gap ratio " << r.gap_ratio << "]";
        os << "\n";
    }
    os << "generic set membership: " << (r.in_U ? "yes" : "no") << "\n";
    os << "graded kernel dims: (" << r.dims.dm1 << ", " << r.dims.d0 << ", " << r.dims.d1 << ")\n";
    if (r.semisimple.has_value()) os << "semisimple: " << (*r.semisimple ? "yes" : "no") << "\n";
    if (r.invariants)
        os << "orbit representative: (" << rat_str(r.invariants->x) << ", " << rat_str(r.invariants->y) << ", "
           << rat_str(r.invariants->z) << ")\n";
    os << "mode: " << (r.mode == Mode::exact ? "exact" : "approx") << "\n";
    return os.str();
}

std::string components_to_json(const CrossedDiagram& d, const std::vector<CohomologyComponent>& comps) {
    ordered_json j;
    j["diagram"] = diagram_str(d);
    GradingInfo info = graded_dims(d);
    j["depth"] = info.depth;
    j["g0"] = info.g0_descriptor;
    j["components"] = ordered_json::array();
    for (const auto& c : comps) {
        ordered_json e;
        e["degree"] = c.degree;
        e["homogeneity"] = c.homogeneity;
        e["weyl_word"] = c.weyl_word;
        e["weight"] = c.weight;
        j["components"].push_back(std::move(e));
    }
    return j.dump() + "\n";
}

std::string components_to_text(const CrossedDiagram& d, const std::vector<CohomologyComponent>& comps) {
    std::ostringstream os;
    os << diagram_str(d) << ": " << comps.size() << " component" << (comps.size() == 1 ? "" : "s") << "\n";
    for (const auto& c : comps) {
        os << "  degree " << c.degree << ", homogeneity " << c.homogeneity << ", word [";
        for (size_t k = 0; k < c.weyl_word.size(); ++k) os << (k ? " " : "") << "s" << c.weyl_word[k];
        os << "], weight (";
        for (size_t k = 0; k < c.weight.size(); ++k) os << (k ? "," : "") << c.weight[k];
        os << ")\n";
    }
    return os.str();
}

std::string enumeration_to_json(const std::vector<CrossedDiagram>& ds) {
    ordered_json j = ordered_json::array();
    for (const auto& d : ds) {
        ordered_json e;
        e["diagram"] = diagram_str(d);
        GradingInfo info = graded_dims(d);
        e["depth"] = info.depth;
        e["dim_g1"] = info.dims.count(-1) ? info.dims.at(-1) : 0;
        e["dim_g2"] = info.dims.count(-2) ? info.dims.at(-2) : 0;
        e["g0"] = info.g0_descriptor;
        e["contact"] = is_contact(d);
        j.push_back(std::move(e));
    }
    return j.dump() + "\n";
}

std::string enumeration_to_text(const std::vector<CrossedDiagram>& ds) {
    std::ostringstream os;
    for (const auto& d : ds) {
        GradingInfo info = graded_dims(d);
        os << diagram_str(d) << "  dims(" << info.dims.at(-1) << "," << (info.dims.count(-2) ? info.dims.at(-2) : 0)
           << ")  g0 = " << info.g0_descriptor << (is_contact(d) ? "  [contact]" : "") << "\n";
    }
    return os.str();
}

std::string rank_table_to_csv(const RankTable& t) {
    std::ostringstream os;
    os << "corank,min_rank,sqrt_2s,ranks\n";
    for (int s = 3; s <= t.max_corank; ++s) {
        auto ranks = t.ranks_for(s);
        os << s << ",";
        if (ranks.empty())
            os << ",";
        else {
            os << ranks.front() << ",";
        }
        double guide = std::sqrt(2.0 * s);
        os << guide << ",";
        for (size_t k = 0; k < ranks.size(); ++k) os << (k ? " " : "") << ranks[k];
        os << "\n";
    }
    return os.str();
}

std::string rank_table_to_json(const RankTable& t) {
    ordered_json j;
    j["max_corank"] = t.max_corank;
    j["max_rank"] = t.max_rank;
    j["rows"] = ordered_json::array();
    for (int s = 3; s <= t.max_corank; ++s) {
        ordered_json row;
        row["corank"] = s;
        row["ranks"] = t.ranks_for(s);
        auto ranks = t.ranks_for(s);
        row["min_rank"] = ranks.empty() ? 0 : ranks.front();
        row["sqrt_two_corank"] = std::sqrt(2.0 * s);
        j["rows"].push_back(std::move(row));
    }
    return j.dump() + "\n";
}

}  // namespace tg
