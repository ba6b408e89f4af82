#include "cli_app.hpp"

#include "fibscramble/analysis.hpp"
#include "fibscramble/attacks.hpp"
#include "fibscramble/errors.hpp"
#include "fibscramble/imageio.hpp"
#include "fibscramble/keyfile.hpp"
#include "fibscramble/reports.hpp"
#include "fibscramble/scramble.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fibscramble::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kReferenceUnimodularCount = 24030;

struct MapFlags {
    std::string family;
    std::optional<std::int64_t> k, i;
    std::optional<int> variant;
    std::string series;
    std::vector<std::int64_t> entries;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "map family: arnold, gat, fibonacci-q, gft, flt, f11lt, f32lt, f31lt, triangular, raw");
        cmd->add_option("--k", k, "k for gat / triangular");
        cmd->add_option("--variant", variant, "variant for gat (0..7, default 1) / triangular (0..3, default 0)");
        cmd->add_option("--i", i, "index for gft / flt");
        cmd->add_option("--series", series, "series for flt: fib11, fib32, fib31");
        cmd->add_option("--entries", entries, "a,b,c,d for raw")->delimiter(',')->expected(4);
    }

    TransformMap build() const {
        json params = json::object();
        if (family == "gat" || family == "triangular") {
            params["k"] = k.value_or(1);
            params["variant"] = variant.value_or(family == "gat" ? 1 : 0);
        } else if (family == "gft" || family == "f11lt" || family == "f32lt" || family == "f31lt") {
            params["i"] = i.value_or(1);
        } else if (family == "flt") {
            params["i"] = i.value_or(1);
            params["series"] = series.empty() ? "fib11" : series;
        } else if (family == "raw") {
            if (entries.size() != 4) throw CLI::ValidationError("--entries", "raw maps need --entries a,b,c,d");
            params["entries"] = entries;
        }
        return map_from_tag(family, params);
    }
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected lo..hi, got '" + text + "'");
    try {
        std::size_t used_lo = 0, used_hi = 0;
        const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
        const std::int64_t lo = std::stoll(lo_text, &used_lo), hi = std::stoll(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--range", "expected lo..hi, got '" + text + "'");
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw PnmError("cannot write " + path.string());
    f << text;
}

void check_format(const std::string& format) {
    if (format != "table" && format != "json") throw CLI::ValidationError("--format", "expected table or json");
}

// Scrambling reference for map classes: values 1..N^2 when they fit in 8 bits.
ImageGrid default_reference(std::int64_t n) {
    ImageGrid g(n, 1);
    auto data = g.data();
    for (std::size_t k = 0; k < data.size(); ++k) data[k] = static_cast<std::uint8_t>((k + 1) % 256);
    return g;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Periodic 2x2 modular image scrambling (Arnold, Fibonacci, Fibonacci-Lucas maps)", "fibscramble"};
    app.require_subcommand(1);

    // scramble / unscramble
    std::string in_path, key_path, out_path;
    bool verbose = false;
    auto* scramble_cmd = app.add_subcommand("scramble", "scramble a square PGM/PPM with a key file");
    auto* unscramble_cmd = app.add_subcommand("unscramble", "invert a scramble with the same key file");
    for (auto* cmd : {scramble_cmd, unscramble_cmd}) {
        cmd->add_option("input", in_path, "input PNM")->required();
        cmd->add_option("key", key_path, "key file (JSON)")->required();
        cmd->add_option("output", out_path, "output PNM")->required();
    }
    unscramble_cmd->add_flag("-v,--verbose", verbose, "report the decryption route and both route costs");

    // keygen
    MapFlags keygen_flags;
    std::int64_t keygen_n = 0;
    std::uint64_t keygen_t = 0;
    auto* keygen_cmd = app.add_subcommand("keygen", "write a key file");
    keygen_flags.add_to(keygen_cmd);
    keygen_cmd->get_option("--family")->required();
    keygen_cmd->add_option("--n", keygen_n, "modulus (image side)")->required();
    keygen_cmd->add_option("--iterations", keygen_t, "iteration count t")->required();
    keygen_cmd->add_option("output", out_path, "key file to write")->required();

    // period
    MapFlags period_flags;
    std::string period_key, format = "table";
    std::optional<std::int64_t> period_n;
    auto* period_cmd = app.add_subcommand("period", "period of a map mod N");
    period_flags.add_to(period_cmd);
    period_cmd->add_option("--key", period_key, "take the map and N from a key file");
    period_cmd->add_option("--n", period_n, "modulus");

    // survey
    std::vector<std::string> families;
    std::string range_text;
    std::int64_t survey_n = 0;
    std::optional<std::uint64_t> survey_cap;
    auto* survey_cmd = app.add_subcommand("survey", "period table: one row per family, one column per parameter");
    survey_cmd->add_option("--families", families, "comma list of gft, gat, gat-eq2, f11lt, f32lt, f31lt, tri")
        ->delimiter(',')
        ->required();
    survey_cmd->add_option("--range", range_text, "parameter range lo..hi")->required();
    survey_cmd->add_option("--n", survey_n, "modulus")->required();
    survey_cmd->add_option("--cap", survey_cap, "period iteration cap (default 6 N^2)");

    // enumerate
    std::int64_t enum_lo = 0, enum_hi = 0;
    bool enum_list = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "count 2x2 matrices with entries in [lo, hi] and |det| = 1");
    enum_cmd->add_option("--lo", enum_lo)->required();
    enum_cmd->add_option("--hi", enum_hi)->required();
    enum_cmd->add_flag("--list", enum_list, "print every matrix");

    // classes
    std::int64_t classes_lo = 1, classes_hi = 8, classes_n = 3;
    std::string reference_path;
    auto* classes_cmd =
        app.add_subcommand("classes", "group family maps by orbit; flagged classes can decrypt each other");
    classes_cmd->add_option("--lo", classes_lo, "lowest parameter (default 1)");
    classes_cmd->add_option("--hi", classes_hi, "highest parameter (default 8)");
    classes_cmd->add_option("--n", classes_n, "modulus (default 3)");
    classes_cmd->add_option("--reference", reference_path, "reference PNM (default: values 1..N^2)");

    // attack
    std::string attack_kind, report_path, out_dir;
    double density = 0.05, mean = 0.0, variance = -1.0;
    std::vector<std::int64_t> rect;
    int fill = 0, quality = 75;
    std::uint64_t seed = 0;
    auto* attack_cmd = app.add_subcommand("attack", "scramble, attack, unscramble, and report recovery metrics");
    attack_cmd->add_option("input", in_path, "input PNM")->required();
    attack_cmd->add_option("key", key_path, "key file (JSON)")->required();
    attack_cmd->add_option("--attack", attack_kind, "salt-pepper, gaussian, speckle, crop, compress")->required();
    attack_cmd->add_option("--density", density, "salt-pepper density (default 0.05)");
    attack_cmd->add_option("--mean", mean, "gaussian mean (default 0)");
    attack_cmd->add_option("--variance", variance, "gaussian variance on 0..255 (default 100); speckle (default 0.04)");
    attack_cmd->add_option("--rect", rect, "crop rectangle row,col,height,width")->delimiter(',')->expected(4);
    attack_cmd->add_option("--fill", fill, "crop fill value (default 0)")->check(CLI::Range(0, 255));
    attack_cmd->add_option("--quality", quality, "compression quality 1..100 (default 75)");
    attack_cmd->add_option("--seed", seed, "noise seed (default 0)");
    attack_cmd->add_option("--report", report_path, "write the JSON report here");
    attack_cmd->add_option("--out-dir", out_dir, "write scrambled/attacked/recovered PNMs here");

    for (auto* cmd : {period_cmd, survey_cmd, enum_cmd, classes_cmd, attack_cmd}) {
        cmd->add_option("--format", format, "table or json (default table)");
    }

    try {
        std::vector<std::string> args;
        for (int k = argc - 1; k > 0; --k) args.emplace_back(argv[k]);
        app.parse(std::move(args));
        check_format(format);
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage_out, usage_err;
        const int code = app.exit(e, usage_out, usage_err);
        out << usage_out.str();
        err << usage_err.str();
        return code == 0 ? kOk : kUsageError;
    }

    const bool json_out = format == "json";
    try {
        if (*scramble_cmd || *unscramble_cmd) {
            const ScrambleKey key = load_key(key_path);
            const ImageGrid img = load_pnm(in_path);
            if (*scramble_cmd) {
                save_pnm(scramble(img, key), out_path);
            } else {
                const ImageGrid restored = unscramble(img, key);
                if (verbose) {
                    const DecryptionPlan plan = plan_decryption(key);
                    out << "period " << plan.period << "\n"
                        << "route " << (plan.chosen == Route::Inverse ? "inverse" : "forward") << "\n"
                        << "inverse iterations " << plan.inverse_iterations << "\n"
                        << "forward iterations " << plan.forward_iterations << "\n";
                }
                save_pnm(restored, out_path);
            }
        } else if (*keygen_cmd) {
            ScrambleKey key{keygen_flags.build(), keygen_n, keygen_t};
            validate(key.map, key.modulus);
            save_key(key, out_path);
        } else if (*period_cmd) {
            TransformMap map;
            std::int64_t n = 0;
            if (!period_key.empty()) {
                const ScrambleKey key = load_key(period_key);
                map = key.map;
                n = period_n.value_or(key.modulus);
            } else {
                if (period_flags.family.empty() || !period_n) {
                    throw CLI::ValidationError("period", "give --key, or --family with --n");
                }
                map = period_flags.build();
                n = *period_n;
            }
            const PeriodReport report = period(validate(map, n));
            out << (json_out ? to_json(report).dump(2) + "\n" : to_table(report));
            if (map.warning) err << "warning: " << *map.warning << "\n";
            if (report.iteration_cap_hit) return kMathError;
        } else if (*survey_cmd) {
            std::vector<SurveyFamily> parsed;
            for (const std::string& tag : families) {
                const auto f = parse_survey_family(tag);
                if (!f) throw CLI::ValidationError("--families", "unknown family '" + tag + "'");
                parsed.push_back(*f);
            }
            const auto [lo, hi] = parse_range(range_text);
            const Survey survey = period_survey(parsed, lo, hi, survey_n, survey_cap);
            out << (json_out ? to_json(survey).dump(2) + "\n" : to_table(survey));
            if (survey.error_count() > 0) err << "warning: " << survey.error_count() << " cell(s) failed\n";
        } else if (*enum_cmd) {
            const EnumerationReport report = enumerate_unimodular(enum_lo, enum_hi, enum_list);
            const bool reference_range = enum_lo == 0 && enum_hi == 99;
            if (json_out) {
                json j = to_json(report);
                if (reference_range) {
                    j["reference_count"] = kReferenceUnimodularCount;
                    j["matches_reference"] = report.count == kReferenceUnimodularCount;
                }
                out << j.dump(2) << "\n";
            } else {
                out << to_table(report);
                if (reference_range) {
                    out << "reference      " << kReferenceUnimodularCount << ' '
                        << (report.count == kReferenceUnimodularCount ? "(match)" : "(MISMATCH)") << '\n';
                }
            }
        } else if (*classes_cmd) {
            const ImageGrid reference = reference_path.empty() ? default_reference(classes_n) : load_pnm(reference_path);
            const auto classes =
                equivalence_classes(family_catalog(classes_lo, classes_hi, reference.side()), reference);
            out << (json_out ? to_json(classes).dump(2) + "\n" : to_table(classes));
        } else if (*attack_cmd) {
            const ScrambleKey key = load_key(key_path);
            const ImageGrid img = load_pnm(in_path);
            AttackSpec spec{attack::SaltPepper{density}, seed};
            if (attack_kind == "gaussian") {
                spec.kind = attack::Gaussian{mean, variance < 0 ? 100.0 : variance};
            } else if (attack_kind == "speckle") {
                spec.kind = attack::Speckle{variance < 0 ? 0.04 : variance};
            } else if (attack_kind == "crop") {
                if (rect.size() != 4) throw CLI::ValidationError("--rect", "crop needs --rect row,col,height,width");
                spec.kind = attack::Crop{{rect[0], rect[1], rect[2], rect[3]}, static_cast<std::uint8_t>(fill)};
            } else if (attack_kind == "compress") {
                spec.kind = attack::CompressSurrogate{quality};
            } else if (attack_kind != "salt-pepper") {
                throw CLI::ValidationError("--attack", "unknown attack '" + attack_kind + "'");
            }
            const RecoveryExperiment e = recovery_experiment(img, key, spec);
            out << (json_out ? to_json(e.report).dump(2) + "\n" : to_table(e.report));
            if (!report_path.empty()) write_text(report_path, to_json(e.report).dump(2) + "\n");
            if (!out_dir.empty()) {
                const std::filesystem::path dir(out_dir);
                std::filesystem::create_directories(dir);
                save_pnm(e.scrambled, dir / "scrambled.pnm");
                save_pnm(e.attacked, dir / "attacked.pnm");
                save_pnm(e.recovered, dir / "recovered.pnm");
            }
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InvalidScrambler& e) {
        err << "error: " << e.what() << "\n";
        return kMathError;
    } catch (const PeriodCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kMathError;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return kMathError;
    } catch (const RangeTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
    return kOk;
}

}  // namespace fibscramble::cli
