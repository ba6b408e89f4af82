#include "fibscramble/analysis.hpp"

#include "fibscramble/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

namespace fibscramble {

std::vector<ImageGrid> orbit(const ValidatedMap& vm, const ImageGrid& reference) {
    if (reference.side() != vm.modulus()) {
        throw DimensionMismatch("reference side " + std::to_string(reference.side()) + " does not match modulus " +
                                std::to_string(vm.modulus()));
    }
    const std::uint64_t p = require_period(vm);
    std::vector<ImageGrid> states;
    states.reserve(p - 1);
    ImageGrid cur = reference;
    for (std::uint64_t t = 1; t < p; ++t) {
        cur = permute(cur, vm.reduced(), vm.modulus());
        states.push_back(cur);
    }
    return states;
}

OrbitSignature orbit_signature(const ValidatedMap& vm, const ImageGrid& reference) {
    OrbitSignature sig{vm.map().label, vm.modulus(), 0, {}};
    for (const ImageGrid& g : orbit(vm, reference)) sig.states.emplace(g.data().begin(), g.data().end());
    sig.period = require_period(vm);
    return sig;
}

bool pattern_equivalent(const ValidatedMap& a, const ValidatedMap& b, const ImageGrid& reference) {
    if (a.modulus() != b.modulus()) {
        throw DimensionMismatch("maps have different moduli " + std::to_string(a.modulus()) + " and " +
                                std::to_string(b.modulus()));
    }
    return orbit_signature(a, reference).states == orbit_signature(b, reference).states;
}

std::vector<EquivalenceClass> equivalence_classes(const std::vector<ValidatedMap>& maps, const ImageGrid& reference) {
    std::vector<EquivalenceClass> classes;
    std::map<std::set<std::vector<std::uint8_t>>, std::size_t> index;
    for (const ValidatedMap& vm : maps) {
        OrbitSignature sig = orbit_signature(vm, reference);
        auto [it, inserted] = index.try_emplace(std::move(sig.states), classes.size());
        if (inserted) classes.push_back({{}, sig.period, false});
        EquivalenceClass& cls = classes[it->second];
        cls.labels.push_back(vm.map().label);
        cls.flagged = cls.labels.size() > 1;
    }
    return classes;
}

std::vector<ValidatedMap> family_catalog(std::int64_t lo, std::int64_t hi, std::int64_t modulus) {
    std::vector<TransformMap> candidates{make_arnold(), make_fibonacci_q()};
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (i >= 1) {
            candidates.push_back(make_gft(i));
            candidates.push_back(make_flt(Series::Fib11, i));
            candidates.push_back(make_flt(Series::Fib32, i));
            candidates.push_back(make_flt(Series::Fib31, i));
        }
        if (i >= 0) {
            for (int v = 0; v < 8; ++v) candidates.push_back(make_generalized_arnold(i, v));
            for (int v = 0; v < 4; ++v) candidates.push_back(make_triangular(i, v));
        }
    }
    std::vector<ValidatedMap> out;
    for (const TransformMap& m : candidates) {
        try {
            out.push_back(validate(m, modulus));
        } catch (const InvalidScrambler&) {
        }
    }
    return out;
}

namespace {

struct Counts {
    std::uint64_t plus = 0, minus = 0;
    std::vector<Matrix2> matrices;
};

// All (b, c, d) for one fixed a.
Counts enumerate_slice(std::int64_t a, std::int64_t lo, std::int64_t hi, bool collect) {
    Counts counts;
    for (std::int64_t b = lo; b <= hi; ++b) {
        for (std::int64_t c = lo; c <= hi; ++c) {
            const __int128 bc = static_cast<__int128>(b) * c;
            for (std::int64_t d = lo; d <= hi; ++d) {
                const __int128 det = static_cast<__int128>(a) * d - bc;
                if (det == 1) {
                    ++counts.plus;
                } else if (det == -1) {
                    ++counts.minus;
                } else {
                    continue;
                }
                if (collect) counts.matrices.push_back({a, b, c, d});
            }
        }
    }
    return counts;
}

}  // namespace

EnumerationReport enumerate_unimodular(std::int64_t lo, std::int64_t hi, bool collect) {
    if (lo > hi) throw std::invalid_argument("enumeration range needs lo <= hi");
    const auto width = static_cast<long double>(hi) - static_cast<long double>(lo) + 1.0L;
    if (width * width * width * width > static_cast<long double>(kEnumerationWorkBound)) {
        throw RangeTooLarge("range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] needs more than " +
                            std::to_string(kEnumerationWorkBound) + " candidate matrices");
    }
    const auto slices = static_cast<std::size_t>(hi - lo + 1);
    std::vector<Counts> results(slices);
    const std::size_t workers = std::max(1U, std::min(std::thread::hardware_concurrency(), 16U));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < slices; s += workers) {
                    results[s] = enumerate_slice(lo + static_cast<std::int64_t>(s), lo, hi, collect);
                }
            });
        }
    }
    EnumerationReport report{lo, hi, 0, 0, 0, {}};
    for (Counts& c : results) {
        report.det_plus_one += c.plus;
        report.det_minus_one += c.minus;
        if (collect) report.matrices.insert(report.matrices.end(), c.matrices.begin(), c.matrices.end());
    }
    report.count = report.det_plus_one + report.det_minus_one;
    return report;
}

std::optional<SurveyFamily> parse_survey_family(const std::string& tag) {
    static const std::map<std::string, SurveyFamily> tags{
        {"gft", SurveyFamily::GFT},     {"gat", SurveyFamily::GAT},     {"f11lt", SurveyFamily::F11LT},
        {"f32lt", SurveyFamily::F32LT}, {"f31lt", SurveyFamily::F31LT}, {"gat-eq2", SurveyFamily::GATEq2},
        {"tri", SurveyFamily::Triangular},
    };
    const auto it = tags.find(tag);
    if (it == tags.end()) return std::nullopt;
    return it->second;
}

std::string survey_family_tag(SurveyFamily f) {
    switch (f) {
    case SurveyFamily::GFT: return "gft";
    case SurveyFamily::GAT: return "gat";
    case SurveyFamily::F11LT: return "f11lt";
    case SurveyFamily::F32LT: return "f32lt";
    case SurveyFamily::F31LT: return "f31lt";
    case SurveyFamily::GATEq2: return "gat-eq2";
    case SurveyFamily::Triangular: return "tri";
    }
    return "?";
}

TransformMap survey_map(SurveyFamily f, std::int64_t param) {
    switch (f) {
    case SurveyFamily::GFT: return make_gft(param);
    case SurveyFamily::GAT: return make_generalized_arnold(param, 1);
    case SurveyFamily::F11LT: return make_flt(Series::Fib11, param);
    case SurveyFamily::F32LT: return make_flt(Series::Fib32, param);
    case SurveyFamily::F31LT: return make_flt(Series::Fib31, param);
    case SurveyFamily::GATEq2: return make_generalized_arnold(param, 0);
    case SurveyFamily::Triangular: return make_triangular(param, 0);
    }
    throw std::invalid_argument("unknown survey family");
}

std::size_t Survey::error_count() const {
    std::size_t n = 0;
    for (const SurveyRow& row : rows) {
        for (const SurveyCell& cell : row.cells) n += cell.period ? 0 : 1;
    }
    return n;
}

Survey period_survey(const std::vector<SurveyFamily>& families, std::int64_t lo, std::int64_t hi, std::int64_t modulus,
                     std::optional<std::uint64_t> cap) {
    Survey survey{modulus, lo, hi, {}};
    for (SurveyFamily f : families) {
        SurveyRow row{f, {}};
        for (std::int64_t p = lo; p <= hi; ++p) {
            SurveyCell cell{p, std::nullopt, {}};
            try {
                const ValidatedMap vm = validate(survey_map(f, p), modulus);
                const PeriodReport report = period(vm, cap.value_or(default_period_cap(modulus)));
                if (report.iteration_cap_hit) {
                    cell.error = "period cap exceeded";
                } else {
                    cell.period = report.period;
                }
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
            row.cells.push_back(std::move(cell));
        }
        survey.rows.push_back(std::move(row));
    }
    return survey;
}

}  // namespace fibscramble
