#include "covercheck/runner.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

#include "covercheck/deadline.hpp"
#include "covercheck/errors.hpp"
#include "covercheck/morphism.hpp"
#include "covercheck/printer.hpp"
#include "covercheck/problem.hpp"
#include "json.hpp"

namespace covercheck {

namespace {

using Json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
    return out;
}

OrderKind order_kind_of(const std::string& word) {
    if (word == "lex") return OrderKind::Lex;
    if (word == "grevlex") return OrderKind::Grevlex;
    throw InputError("unknown order '" + word + "' (expected lex or grevlex)");
}

// Canonical certificate form for an ideal: its reduced grevlex basis.
Json canonical_gens(const Ideal& ideal) {
    Json arr = Json::array();
    MonomialOrder ord = MonomialOrder::grevlex();
    for (const auto& g : ideal.groebner(ord).polys) arr.push_back(print_poly(g, ord));
    return arr;
}

Json poly_list(const std::vector<Polynomial>& polys, const MonomialOrder& order) {
    Json arr = Json::array();
    for (const auto& f : polys) arr.push_back(print_poly(f, order));
    return arr;
}

void attach_locus(Json& report, const char* key, const Ideal& locus) {
    report["empty_locus"] = is_trivial(locus);
    report[key] = canonical_gens(locus);
}

void run_fiber(Json& report, const ProblemFile& pf, const MorphismPresentation& mp,
               const RunOptions& opt) {
    if (opt.point_name.empty()) throw InputError("fiber requires --point <name>");
    const auto* coords = pf.find_point(opt.point_name);
    if (!coords) {
        std::string known;
        for (const auto& [name, c] : pf.points) known += (known.empty() ? "" : ", ") + name;
        throw InputError("unknown point '" + opt.point_name + "'" +
                         (known.empty() ? " (the file declares no points)"
                                        : " (declared: " + known + ")"));
    }
    FiberReport fr = mp.fiber_report(*coords);
    Json point;
    point["name"] = opt.point_name;
    Json cs = Json::array();
    for (const auto& c : fr.point) cs.push_back(to_string(c));
    point["coordinates"] = cs;
    report["point"] = point;
    report["length"] = fr.length;
    report["distinct"] = fr.distinct;
    report["real"] = fr.real_points;
    report["separating_form"] =
        fr.separating_form ? Json(print_poly(*fr.separating_form, MonomialOrder::grevlex()))
                           : Json(nullptr);
}

void run_covering(Json& report, const ProblemFile& pf, const MorphismPresentation& mp,
                  const RunOptions& opt) {
    CoveringVerdict cv = mp.covering_verdict(opt.assume_reduced, pf.radical_gens);
    report["verdict"] = verdict_name(cv.verdict);
    report["finite"] = cv.finite;
    report["flat"] = cv.flat ? Json(*cv.flat) : Json(nullptr);
    report["etale"] = cv.etale ? Json(*cv.etale) : Json(nullptr);
    report["presentation_flat"] =
        cv.presentation_flat ? Json(*cv.presentation_flat) : Json(nullptr);
    report["presentation_etale"] =
        cv.presentation_etale ? Json(*cv.presentation_etale) : Json(nullptr);
    report["used_radical"] = cv.used_radical;
    report["groebner_basis"] = poly_list(mp.gb().polys, mp.order());
    report["non_finite_locus"] =
        cv.non_finite_locus ? canonical_gens(*cv.non_finite_locus) : Json(nullptr);
    report["non_flat_locus"] =
        cv.non_flat_locus ? canonical_gens(*cv.non_flat_locus) : Json(nullptr);
    report["non_etale_locus"] =
        cv.non_etale_locus ? canonical_gens(*cv.non_etale_locus) : Json(nullptr);
    report["note"] = cv.note;
}

Json run_one(const ProblemFile& pf, const MorphismPresentation& mp, const RunOptions& opt) {
    Json report;
    const auto& cmd = opt.command;
    if (cmd == "gb") {
        report["groebner_basis"] = poly_list(mp.gb().polys, mp.order());
    } else if (cmd == "is-finite") {
        FiniteCertificate fc = mp.is_finite();
        report["finite"] = fc.finite;
        Json ws = Json::array();
        for (const auto& w : fc.witnesses) {
            Json jw;
            jw["variable"] = mp.table()->name(w.var);
            jw["power"] = w.power;
            jw["element"] = print_poly(mp.gb().polys[w.gb_index], mp.order());
            ws.push_back(jw);
        }
        report["witnesses"] = ws;
        Json missing = Json::array();
        for (auto v : fc.missing) missing.push_back(mp.table()->name(v));
        report["missing"] = missing;
    } else if (cmd == "non-finite-locus") {
        attach_locus(report, "generators", mp.non_finite_locus());
    } else if (cmd == "is-flat") {
        auto [flat, locus] = mp.is_finite_flat();
        report["flat"] = flat;
        attach_locus(report, "flatness_ideal", locus);
    } else if (cmd == "non-flat-locus") {
        attach_locus(report, "generators", mp.non_flat_locus());
    } else if (cmd == "is-etale") {
        report["flat"] = mp.is_finite_flat().first;
        report["etale"] = mp.is_etale();
    } else if (cmd == "non-etale-locus") {
        attach_locus(report, "generators", mp.non_etale_locus());
    } else if (cmd == "covering") {
        run_covering(report, pf, mp, opt);
    } else if (cmd == "fiber") {
        run_fiber(report, pf, mp, opt);
    } else {
        throw InputError("unknown command '" + cmd + "'");
    }
    return report;
}

std::string join(const Json& strings, const char* sep) {
    std::string out;
    for (const auto& s : strings) {
        if (!out.empty()) out += sep;
        out += s.get<std::string>();
    }
    return out;
}

std::string human_key(std::string key) {
    for (char& c : key)
        if (c == '_') c = ' ';
    return key;
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    for (const auto& [key, val] : report.items()) {
        if (val.is_null()) continue;
        if (key == "time_ms") {
            out << "time: " << val.get<long>() << " ms\n";
        } else if (key == "point") {
            out << "point: " << val["name"].get<std::string>() << " = ("
                << join(val["coordinates"], ", ") << ")\n";
        } else if (key == "fiber_variables" || key == "base_variables") {
            out << human_key(key) << ": " << join(val, " ") << "\n";
        } else if (key == "witnesses") {
            if (!val.empty()) {
                out << "witnesses:\n";
                for (const auto& w : val)
                    out << "  " << w["variable"].get<std::string>() << ": power "
                        << w["power"].get<int>() << " via "
                        << w["element"].get<std::string>() << "\n";
            }
        } else if (key == "missing") {
            if (!val.empty()) out << "no pure-power head for: " << join(val, " ") << "\n";
        } else if (val.is_array()) {
            out << human_key(key) << " (" << val.size() << "):\n";
            for (const auto& e : val) out << "  " << e.get<std::string>() << "\n";
        } else if (val.is_boolean()) {
            out << human_key(key) << ": " << (val.get<bool>() ? "yes" : "no") << "\n";
        } else if (val.is_string()) {
            out << human_key(key) << ": " << val.get<std::string>() << "\n";
        } else {
            out << human_key(key) << ": " << val.dump() << "\n";
        }
    }
    return out.str();
}

}  // namespace

std::string run_parsed(const ProblemFile& pf, const RunOptions& options) {
    deadline::Scope limit(options.timeout_seconds);
    auto started = std::chrono::steady_clock::now();

    OrderKind fiber_kind = pf.fiber_order, base_kind = pf.base_order;
    if (!options.order_override.empty()) {
        const std::string& spec = options.order_override;
        auto comma = spec.find(',');
        fiber_kind = order_kind_of(spec.substr(0, comma));
        base_kind = comma == std::string::npos
                        ? fiber_kind
                        : order_kind_of(spec.substr(comma + 1));
    }
    MorphismPresentation mp(pf.table, pf.ideal_gens, fiber_kind, base_kind);

    Json report;
    report["command"] = options.command;
    report["digest"] = fnv1a_hex(pf.source_text + "\x1f" + options.command + "\x1f" +
                                 options.point_name + "\x1f" +
                                 (options.assume_reduced ? "1" : "0") + "\x1f" +
                                 mp.order().key());
    Json fiber_names = Json::array(), base_names = Json::array();
    for (std::size_t i = 0; i < pf.table->size(); ++i)
        (i < pf.table->split() ? fiber_names : base_names).push_back(pf.table->name(i));
    report["fiber_variables"] = fiber_names;
    report["base_variables"] = base_names;
    report["order"] = mp.order().key();

    Json body = run_one(pf, mp, options);
    for (auto& [key, val] : body.items()) report[key] = val;

    auto elapsed = std::chrono::steady_clock::now() - started;
    report["time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    return options.json ? report.dump(2) + "\n" : render_text(report);
}

std::string run_command(const std::string& problem_text, const RunOptions& options) {
    return run_parsed(parse_problem(problem_text), options);
}

}  // namespace covercheck
