#include "fibscramble/reports.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace fibscramble {

using nlohmann::json;

namespace {

// JSON has no infinity; lossless recovery reports null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string fixed(double v, int digits) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

}  // namespace

json to_json(const PeriodReport& r) {
    return json{{"label", r.label},
                {"n", r.modulus},
                {"period", r.iteration_cap_hit ? json(nullptr) : json(r.period)},
                {"iteration_cap_hit", r.iteration_cap_hit}};
}

std::string to_table(const PeriodReport& r) {
    std::ostringstream s;
    s << "map      " << r.label << '\n' << "n        " << r.modulus << '\n';
    if (r.iteration_cap_hit) {
        s << "period   ERROR (iteration cap hit)\n";
    } else {
        s << "period   " << r.period << '\n';
    }
    return s.str();
}

json to_json(const Survey& sv) {
    json rows = json::array();
    for (const SurveyRow& row : sv.rows) {
        json cells = json::array();
        for (const SurveyCell& c : row.cells) {
            json cell{{"param", c.param}, {"period", c.period ? json(*c.period) : json(nullptr)}};
            if (!c.period) cell["error"] = c.error;
            cells.push_back(std::move(cell));
        }
        rows.push_back({{"family", survey_family_tag(row.family)}, {"cells", std::move(cells)}});
    }
    return json{{"n", sv.modulus}, {"lo", sv.lo}, {"hi", sv.hi}, {"rows", std::move(rows)},
                {"error_count", sv.error_count()}};
}

std::string to_table(const Survey& sv) {
    std::ostringstream s;
    if (sv.lo > sv.hi) return "";
    s << std::left << std::setw(8) << "family";
    for (std::int64_t p = sv.lo; p <= sv.hi; ++p) s << std::right << std::setw(6) << p;
    s << '\n';
    for (const SurveyRow& row : sv.rows) {
        s << std::left << std::setw(8) << survey_family_tag(row.family);
        for (const SurveyCell& c : row.cells) {
            s << std::right << std::setw(6) << (c.period ? std::to_string(*c.period) : std::string("ERROR"));
        }
        s << '\n';
    }
    return s.str();
}

json to_json(const EnumerationReport& r) {
    json j{{"lo", r.lo},
           {"hi", r.hi},
           {"criterion", "|det| == 1"},
           {"count", r.count},
           {"det_plus_one", r.det_plus_one},
           {"det_minus_one", r.det_minus_one}};
    if (!r.matrices.empty()) {
        json list = json::array();
        for (const Matrix2& m : r.matrices) list.push_back({m.a, m.b, m.c, m.d});
        j["matrices"] = std::move(list);
    }
    return j;
}

std::string to_table(const EnumerationReport& r) {
    std::ostringstream s;
    s << "range          " << r.lo << ".." << r.hi << '\n'
      << "count          " << r.count << '\n'
      << "det = +1       " << r.det_plus_one << '\n'
      << "det = -1       " << r.det_minus_one << '\n';
    for (const Matrix2& m : r.matrices) s << m.a << ' ' << m.b << ' ' << m.c << ' ' << m.d << '\n';
    return s.str();
}

json to_json(const std::vector<EquivalenceClass>& classes) {
    json out = json::array();
    for (const EquivalenceClass& c : classes) {
        out.push_back({{"period", c.period}, {"flagged", c.flagged}, {"maps", c.labels}});
    }
    return out;
}

std::string to_table(const std::vector<EquivalenceClass>& classes) {
    std::ostringstream s;
    for (const EquivalenceClass& c : classes) {
        s << (c.flagged ? "AVOID " : "ok    ") << "period " << std::setw(4) << c.period << "  ";
        for (std::size_t i = 0; i < c.labels.size(); ++i) s << (i ? " " : "") << c.labels[i];
        s << '\n';
    }
    return s.str();
}

json to_json(const RecoveryReport& r) {
    return json{{"attack", attack_name(r.spec)},
                {"seed", r.spec.seed},
                {"sse_on_scrambled", r.sse_on_scrambled},
                {"sse_on_recovered", r.sse_on_recovered},
                {"mse_on_scrambled", r.mse_on_scrambled},
                {"mse_on_recovered", r.mse_on_recovered},
                {"psnr_recovered", finite_or_null(r.psnr_recovered)},
                {"changed_on_scrambled", r.changed_on_scrambled},
                {"changed_on_recovered", r.changed_on_recovered},
                {"isometry_holds", r.sse_on_scrambled == r.sse_on_recovered &&
                                       r.changed_on_scrambled == r.changed_on_recovered}};
}

std::string to_table(const RecoveryReport& r) {
    std::ostringstream s;
    s << "attack                 " << attack_name(r.spec) << '\n'
      << "seed                   " << r.spec.seed << '\n'
      << "mse scrambled/attacked " << fixed(r.mse_on_scrambled, 6) << '\n'
      << "mse original/recovered " << fixed(r.mse_on_recovered, 6) << '\n'
      << "psnr recovered (dB)    " << fixed(r.psnr_recovered, 3) << '\n'
      << "changed pixels         " << r.changed_on_scrambled << " / " << r.changed_on_recovered << '\n';
    return s.str();
}

}  // namespace fibscramble
