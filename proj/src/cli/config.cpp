#include "frachh/cli.hpp"

#include "frachh/error.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

namespace frachh::cli {

namespace {

constexpr std::size_t kMaxGridPoints = 10000;

double parse_number(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v)) {
        throw UsageError("malformed number '" + std::string(text) + "'");
    }
    return v;
}

} // namespace

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        const std::size_t c1 = token.find(':');
        if (c1 == std::string_view::npos) {
            out.push_back(parse_number(token));
        } else {
            const std::size_t c2 = token.find(':', c1 + 1);
            if (c2 == std::string_view::npos || token.find(':', c2 + 1) != std::string_view::npos) {
                throw UsageError("range must read start:stop:step, got '" + std::string(token) + "'");
            }
            const double start = parse_number(token.substr(0, c1));
            const double stop = parse_number(token.substr(c1 + 1, c2 - c1 - 1));
            const double step = parse_number(token.substr(c2 + 1));
            if (!(step > 0.0) || stop < start) {
                throw UsageError("range needs step > 0 and stop >= start");
            }
            const double span = (stop - start) / step;
            if (span > static_cast<double>(kMaxGridPoints)) {
                throw UsageError("range has too many points");
            }
            const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
            for (std::size_t i = 0; i < n; ++i) {
                out.push_back(start + static_cast<double>(i) * step);
            }
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return out;
}

double default_tolerance() {
    const char* env = std::getenv("FRACHH_TOL");
    if (env == nullptr || *env == '\0') {
        return kDefaultTol;
    }
    const double tol = parse_number(env);
    if (!(tol > 0.0)) {
        throw UsageError("FRACHH_TOL must be positive");
    }
    return tol;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg.tol = default_tolerance();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Numerical checks of Hermite-Hadamard-Fejer inequalities for Riemann-Liouville "
                 "fractional integrals",
                 "frachh"};
    app.require_subcommand(1);
    std::string alpha_text;
    std::string q_text;
    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

    auto add_common = [&](CLI::App* sub, bool with_theorem) {
        if (with_theorem) {
            sub->add_option("--thm", cfg.theorem, "Theorem identifier");
        }
        sub->add_option("--f", cfg.f_label, "Function label");
        sub->add_option("--g", cfg.g_label, "Weight label");
        sub->add_option("--a", cfg.a, "Left endpoint");
        sub->add_option("--b", cfg.b, "Right endpoint");
        sub->add_option("--alpha", alpha_text, "Order: list or start:stop:step");
        sub->add_option("--q", q_text, "Hoelder exponent q: list or start:stop:step");
        sub->add_option("--tol", cfg.tol, "Absolute quadrature tolerance");
        sub->add_option("--seed", cfg.seed, "Corpus and sampling seed");
        sub->add_option("--format", cfg.format, "json, csv or text")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
            ->option_text("FORMAT");
        sub->add_flag("--strict", cfg.strict_domain, "Require a >= 0; drop [-1, 2] from corpus runs");
        sub->add_flag("--force", cfg.force, "Run verifiers on inputs that miss the hypotheses");
        sub->add_option("--out", cfg.out, "Write the report to this file");
        sub->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)");
    };

    CLI::App* verify = app.add_subcommand("verify", "Run one theorem's verifier");
    CLI::App* identity = app.add_subcommand("identity", "Residuals of both trapezoid identities");
    CLI::App* corpus = app.add_subcommand("corpus", "Every applicable verifier over the corpus");
    CLI::App* sweep = app.add_subcommand("sweep", "One theorem over an alpha (and q) grid");
    add_common(verify, true);
    add_common(identity, false);
    add_common(corpus, false);
    add_common(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    if (verify->parsed()) {
        cfg.command = Command::Verify;
    } else if (identity->parsed()) {
        cfg.command = Command::Identity;
    } else if (corpus->parsed()) {
        cfg.command = Command::Corpus;
    } else {
        cfg.command = Command::Sweep;
    }

    std::vector<Row> rows;
    try {
        if (!alpha_text.empty()) {
            cfg.alpha = parse_grid(alpha_text);
        }
        if (!q_text.empty()) {
            cfg.q = parse_grid(q_text);
        }
        rows = run(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInconclusive;
    }

    if (cfg.out.empty()) {
        write_rows(out, cfg, rows);
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.out << '\n';
            return kExitUsage;
        }
        write_rows(file, cfg, rows);
    }

    std::size_t counts[3] = {0, 0, 0};
    for (const Row& r : rows) {
        ++counts[static_cast<int>(r.status)];
    }
    err << rows.size() << " rows: " << counts[0] << " Holds, " << counts[1] << " Violated, "
        << counts[2] << " Inconclusive\n";
    return exit_code(rows);
}

} // namespace frachh::cli
