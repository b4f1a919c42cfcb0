// Command-line front end: extraction, Farey sequences, cardinalities,
// jump tables, approximation reports, SVG figures, and self-verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ford/approx.hpp"
#include "ford/arith.hpp"
#include "ford/counting.hpp"
#include "ford/geometry.hpp"
#include "ford/render.hpp"
#include "ford/sequences.hpp"
#include "ford/verify.hpp"

namespace {

using namespace ford;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Options {
    std::string format = "text";
    std::string out;
};

int write_payload(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << opt.out << "' for writing\n";
        return kExitDomain;
    }
    f << payload;
    return f.good() ? kExitOk : kExitDomain;
}

std::string format_sequence(const sequences::ExtractionResult& r, const std::string& format) {
    if (format == "json") return sequences::to_json(r.fractions) + "\n";
    if (format == "csv") return sequences::to_csv(r.fractions);
    return sequences::to_text(r.fractions) + "\n";
}

i64 sieve_limit_from_env() {
    if (const char* env = std::getenv("FORD_SIEVE_LIMIT")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= arith::kMaxSieveLimit) return v;
        std::cerr << "warning: ignoring invalid FORD_SIEVE_LIMIT='" << env << "'\n";
    }
    return arith::kDefaultSieveLimit;
}

// Tables are built lazily: only the counting/report paths need them.
const arith::SieveTables& tables() {
    static const arith::SieveTables t = arith::build_sieves(sieve_limit_from_env());
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ford-circle fraction extraction and cardinality toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "Write output to a file instead of stdout");

    // extract --m <int> [--b <p/q>] [--mode exact|paper]
    auto* cmd_extract = app.add_subcommand("extract", "Fractions touched by y = x/m (+ b)");
    i64 ext_m = 0;
    std::string ext_b, ext_mode = "exact";
    cmd_extract->add_option("--m", ext_m, "Reciprocal slope m >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_extract->add_option("--b", ext_b, "Intercept b as p/q in (0,1); selects the affine line");
    cmd_extract->add_option("--mode", ext_mode, "Affine touch condition")
        ->check(CLI::IsMember({"exact", "paper"}));

    // farey --n <int> | --k <p/q>
    auto* cmd_farey = app.add_subcommand("farey", "Farey sequence by order or horizontal line");
    i64 farey_n = 0;
    std::string farey_k;
    auto* farey_n_opt =
        cmd_farey->add_option("--n", farey_n, "Order n >= 1")->check(CLI::PositiveNumber);
    auto* farey_k_opt = cmd_farey->add_option("--k", farey_k, "Line height k as p/q");
    farey_n_opt->excludes(farey_k_opt);
    farey_k_opt->excludes(farey_n_opt);

    // card --m <int> [--method exact|mobius|brute]
    auto* cmd_card = app.add_subcommand("card", "Cardinality of the extracted sequence");
    i64 card_m = 0;
    std::string card_method = "exact";
    cmd_card->add_option("--m", card_m, "m >= 1")->required()->check(CLI::PositiveNumber);
    cmd_card->add_option("--method", card_method, "Evaluation route")
        ->check(CLI::IsMember({"exact", "mobius", "brute"}));

    // jumps --from <int> --to <int>
    auto* cmd_jumps = app.add_subcommand("jumps", "Cardinality increments as CSV");
    i64 jumps_from = 0, jumps_to = 0;
    cmd_jumps->add_option("--from", jumps_from, "First m")->required()->check(CLI::PositiveNumber);
    cmd_jumps->add_option("--to", jumps_to, "Last m")->required()->check(CLI::PositiveNumber);

    // report --from <int> --to <int> [--step <int>]
    auto* cmd_report = app.add_subcommand("report", "Approximation error report as CSV");
    i64 rep_from = 0, rep_to = 0, rep_step = 1;
    cmd_report->add_option("--from", rep_from, "First m (>= 2)")->required();
    cmd_report->add_option("--to", rep_to, "Last m")->required();
    cmd_report->add_option("--step", rep_step, "Stride")->check(CLI::PositiveNumber);

    // render --kind circles|line|lattice --m <int> --out <file.svg>
    auto* cmd_render = app.add_subcommand("render", "Deterministic SVG figures");
    std::string render_kind;
    i64 render_m = 0;
    cmd_render->add_option("--kind", render_kind, "Figure kind")
        ->required()
        ->check(CLI::IsMember({"circles", "line", "lattice"}));
    cmd_render->add_option("--m", render_m, "Slope parameter / q cap")
        ->required()
        ->check(CLI::PositiveNumber);

    // verify [--max-m <int>]
    auto* cmd_verify = app.add_subcommand("verify", "Run the oracle and theorem suites");
    i64 verify_max_m = 2000;
    cmd_verify->add_option("--max-m", verify_max_m, "Sweep bound")->check(CLI::PositiveNumber);

    // Global flags remain usable after the subcommand name.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_extract) {
            sequences::ExtractionResult r =
                ext_b.empty()
                    ? sequences::extract_origin(ext_m)
                    : sequences::extract_affine(ext_m, parse_rational(ext_b),
                                                ext_mode == "paper"
                                                    ? geometry::AffineMode::paper
                                                    : geometry::AffineMode::exact);
            return write_payload(opt, format_sequence(r, opt.format));
        }
        if (*cmd_farey) {
            if (farey_n_opt->count() == farey_k_opt->count()) {
                std::cerr << "error: farey requires exactly one of --n or --k\n";
                return kExitUsage;
            }
            sequences::ExtractionResult r = farey_n_opt->count()
                                                ? sequences::farey(farey_n)
                                                : sequences::farey_horizontal(parse_rational(farey_k));
            return write_payload(opt, format_sequence(r, opt.format));
        }
        if (*cmd_card) {
            i64 value = 0;
            if (card_method == "exact")
                value = counting::cardinality_exact(card_m, &tables());
            else if (card_method == "mobius")
                value = counting::cardinality_mobius(card_m, &tables());
            else
                value = sequences::origin_count(card_m);
            return write_payload(opt, std::to_string(value) + "\n");
        }
        if (*cmd_jumps) {
            if (jumps_from > jumps_to) {
                std::cerr << "error: --from must not exceed --to\n";
                return kExitUsage;
            }
            std::string csv = counting::jumps_csv(jumps_from, jumps_to, &tables());
            // The 3-column m,omega,jump view; full table available in the library.
            std::string out = "m,omega,jump\n";
            std::size_t pos = csv.find('\n') + 1;
            while (pos < csv.size()) {
                std::size_t end = csv.find('\n', pos);
                std::string_view row(csv.data() + pos, end - pos);
                out.append(row.substr(0, row.rfind(',')));
                out += '\n';
                pos = end + 1;
            }
            return write_payload(opt, out);
        }
        if (*cmd_report) {
            if (rep_from < 2 || rep_from > rep_to) {
                std::cerr << "error: report requires 2 <= --from <= --to\n";
                return kExitUsage;
            }
            approx::ReportSummary s = approx::error_report(rep_from, rep_to, rep_step, &tables());
            return write_payload(opt, approx::report_csv(s));
        }
        if (*cmd_render) {
            std::string svg;
            if (render_kind == "circles")
                svg = render::circles_svg(render_m);
            else if (render_kind == "line")
                svg = render::line_svg(render_m);
            else
                svg = render::lattice_svg(render_m);
            return write_payload(opt, svg);
        }
        if (*cmd_verify) {
            verify::VerifyResult r = verify::run(verify_max_m, &std::cerr);
            if (!r.ok) {
                std::cerr << "verification failed: " << r.first_violation << "\n";
                return kExitDomain;
            }
            std::cout << "all checks passed (max m = " << verify_max_m << ")\n";
            return kExitOk;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::length_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
