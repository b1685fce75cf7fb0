#include "twograded.h"

#include <cstring>
#include <sstream>

#include "acceptance.hpp"
#include "classify.hpp"
#include "io_json.hpp"

using namespace tg;

struct tg_bracket {
    Bracket value;
};
struct tg_report {
    ClassificationReport value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tg_status fail(tg_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <class F>
tg_status guarded(F&& f) {
    try {
        return f();
    } catch (const parse_error_ex& e) {
        return fail(TG_ERR_PARSE, e.what());
    } catch (const schema_error& e) {
        return fail(TG_ERR_SCHEMA, e.what());
    } catch (const mode_error& e) {
        return fail(TG_ERR_MODE, e.what());
    } catch (const shape_error& e) {
        return fail(TG_ERR_SHAPE, e.what());
    } catch (const param_error& e) {
        return fail(TG_ERR_PARAM, e.what());
    } catch (const domain_error& e) {
        return fail(TG_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(TG_ERR_INTERNAL, e.what());
    }
}

std::vector<Rat> parse_params(const char* params) {
    std::vector<Rat> out;
    if (!params) return out;
    std::string s(params);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_rat(item));
    }
    return out;
}

FamilyParams make_params(int family, const char* params, int nilpotent_id) {
    FamilyParams p;
    p.family = family;
    p.lambdas = parse_params(params);
    p.nilpotent_id = nilpotent_id;
    return p;
}

}  // namespace

extern "C" {

const char* tg_last_error(void) { return g_last_error.c_str(); }

void tg_string_free(char* s) { std::free(s); }

tg_status tg_bracket_parse_json(const char* json_text, tg_bracket** out) {
    if (!json_text || !out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        *out = new tg_bracket{bracket_from_json(json_text)};
        return TG_OK;
    });
}

tg_status tg_bracket_basic(int n, tg_bracket** out) {
    if (!out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        *out = new tg_bracket{u_basic(n)};
        return TG_OK;
    });
}

tg_status tg_bracket_standard(tg_bracket** out) {
    if (!out) return fail(TG_ERR_PARAM, "null argument");
    *out = new tg_bracket{standard_k()};
    return TG_OK;
}

tg_status tg_bracket_canonical(int family, const char* params, int nilpotent_id, tg_bracket** out) {
    if (!out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        FamilyParams p = make_params(family, params, nilpotent_id);
        Bracket b = canonical_semisimple(p);
        if (nilpotent_id >= 0) {
            auto cat = nilpotent_catalog(family);
            if (nilpotent_id >= static_cast<int>(cat.size()))
                return fail(TG_ERR_PARAM, "nilpotent catalog index out of range");
            b = b + cat[nilpotent_id];
        }
        *out = new tg_bracket{std::move(b)};
        return TG_OK;
    });
}

tg_status tg_bracket_to_json(const tg_bracket* b, char** json_out) {
    if (!b || !json_out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        *json_out = dup_string(bracket_to_json(b->value));
        return TG_OK;
    });
}

tg_status tg_bracket_to_approx(const tg_bracket* b, tg_bracket** out) {
    if (!b || !out) return fail(TG_ERR_PARAM, "null argument");
    *out = new tg_bracket{b->value.to_approx()};
    return TG_OK;
}

void tg_bracket_free(tg_bracket* b) { delete b; }

tg_status tg_classify(const tg_bracket* b, double tol, tg_report** out) {
    if (!b || !out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        ClassifyOptions opts;
        if (tol > 0) opts.tol = tol;
        ClassificationReport r = classify(b->value, opts);
        tg_status rc = TG_OK;
        if (r.family == 0 && r.mode == Mode::approx) {
            g_last_error = r.diagnostic;
            rc = TG_ERR_UNDETERMINED;
        }
        *out = new tg_report{std::move(r)};
        return rc;
    });
}

tg_status tg_report_to_json(const tg_report* r, char** json_out) {
    if (!r || !json_out) return fail(TG_ERR_PARAM, "null argument");
    *json_out = dup_string(report_to_json(r->value));
    return TG_OK;
}

tg_status tg_report_to_text(const tg_report* r, char** text_out) {
    if (!r || !text_out) return fail(TG_ERR_PARAM, "null argument");
    *text_out = dup_string(report_to_text(r->value));
    return TG_OK;
}

int tg_report_family(const tg_report* r) { return r ? r->value.family : 0; }

int tg_report_in_generic_set(const tg_report* r) { return r && r->value.in_U ? 1 : 0; }

void tg_report_free(tg_report* r) { delete r; }

tg_status tg_normalize_unique(const tg_bracket* b, tg_bracket** out) {
    if (!b || !out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        *out = new tg_bracket{normalize_unique(b->value)};
        return TG_OK;
    });
}

tg_status tg_sample_orbit(int family, const char* params, int nilpotent_id, int count, uint64_t seed,
                          char** json_array_out) {
    if (!json_array_out || count < 0) return fail(TG_ERR_PARAM, "bad arguments");
    return guarded([&] {
        auto samples = sample_orbit(make_params(family, params, nilpotent_id), count, seed);
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < samples.size(); ++i) {
            std::string one = bracket_to_json(samples[i]);
            if (!one.empty() && one.back() == '\n') one.pop_back();
            os << (i ? "," : "") << one;
        }
        os << "]\n";
        *json_array_out = dup_string(os.str());
        return TG_OK;
    });
}

tg_status tg_enumerate_two_graded(const char* type_rank, const char* format, char** out) {
    if (!type_rank || !out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        std::string s(type_rank);
        size_t letters = 0;
        while (letters < s.size() && !std::isdigit(static_cast<unsigned char>(s[letters]))) ++letters;
        if (letters == 0 || letters == s.size()) return fail(TG_ERR_PARAM, "type syntax is e.g. D4 or E7");
        std::string head = s.substr(0, letters), rank_str = s.substr(letters);
        LieType t = (head == "E" || head == "F" || head == "G") ? parse_type(head + rank_str) : parse_type(head);
        auto ds = enumerate_two_graded(t, std::stoi(rank_str));
        std::string fmt = format ? format : "json";
        *out = dup_string(fmt == "text" ? enumeration_to_text(ds) : enumeration_to_json(ds));
        return TG_OK;
    });
}

tg_status tg_cohomology(const char* diagram, int degree, const char* format, char** out) {
    if (!diagram || !out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        CrossedDiagram d = parse_diagram(diagram);
        auto comps = kostant_components(d, degree);
        std::string fmt = format ? format : "json";
        *out = dup_string(fmt == "text" ? components_to_text(d, comps) : components_to_json(d, comps));
        return TG_OK;
    });
}

tg_status tg_rank_table(int max_corank, int max_rank, const char* format, char** out) {
    if (!out) return fail(TG_ERR_PARAM, "null argument");
    return guarded([&] {
        RankTable t = semisimple_sum_table(max_corank, max_rank);
        std::string fmt = format ? format : "csv";
        *out = dup_string(fmt == "json" ? rank_table_to_json(t) : rank_table_to_csv(t));
        return TG_OK;
    });
}

int tg_verify(char** report_out) {
    std::ostringstream os;
    bool ok = false;
    try {
        auto results = run_acceptance();
        for (const auto& r : results) os << format_result_line(r) << "\n";
        ok = acceptance_ok(results);
    } catch (const std::exception& e) {
        os << "verification aborted: " << e.what() << "\n";
    }
    if (report_out) *report_out = dup_string(os.str());
    return ok ? 0 : 1;
}

}  // extern "C"
