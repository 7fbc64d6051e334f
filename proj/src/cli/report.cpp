#include "frachh/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace frachh::cli {

namespace {

std::string number(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string number(const std::optional<double>& v) {
    return v ? number(*v) : "null";
}

std::string cell(const std::optional<double>& v) {
    return v && std::isfinite(*v) ? number(*v) : "";
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

const char* command_name(Command c) {
    switch (c) {
    case Command::Verify:
        return "verify";
    case Command::Identity:
        return "identity";
    case Command::Corpus:
        return "corpus";
    case Command::Sweep:
        return "sweep";
    }
    return "verify";
}

} // namespace

void write_json(std::ostream& os, const RunConfig& config, const std::vector<Row>& rows) {
    os << "{\n";
    os << "  \"command\": \"" << command_name(config.command) << "\",\n";
    os << "  \"seed\": " << config.seed << ",\n";
    os << "  \"tol\": " << number(config.tol) << ",\n";
    os << "  \"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        os << (i == 0 ? "\n" : ",\n") << "    {";
        os << "\"theorem\": " << json_string(r.theorem);
        os << ", \"f\": " << json_string(r.f);
        os << ", \"g\": " << json_string(r.g);
        os << ", \"a\": " << number(r.a);
        os << ", \"b\": " << number(r.b);
        os << ", \"alpha\": " << number(r.alpha);
        os << ", \"p\": " << number(r.p);
        os << ", \"q\": " << number(r.q);
        os << ", \"lhs\": " << number(r.lhs);
        os << ", \"mid\": " << number(r.mid);
        os << ", \"rhs\": " << number(r.rhs);
        os << ", \"observed\": " << number(r.observed);
        os << ", \"bound\": " << number(r.bound);
        os << ", \"margin_lower\": " << number(r.margin_lower);
        os << ", \"margin_upper\": " << number(r.margin_upper);
        os << ", \"slack\": " << number(r.slack);
        os << ", \"error_budget\": " << number(r.error_budget);
        os << ", \"status\": \"" << to_string(r.status) << "\"";
        os << ", \"evaluations\": " << r.evaluations;
        os << ", \"seed\": " << r.seed;
        os << ", \"hypotheses_met\": " << (r.hypotheses_met ? "true" : "false");
        os << ", \"note\": " << json_string(r.note) << "}";
    }
    os << (rows.empty() ? "]\n" : "\n  ]\n") << "}\n";
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
    os << "theorem,f,g,a,b,alpha,p,q,lhs,mid,rhs,observed,bound,margin_lower,margin_upper,slack,"
          "error_budget,status,evaluations,seed\n";
    for (const Row& r : rows) {
        os << csv_field(r.theorem) << ',' << csv_field(r.f) << ',' << csv_field(r.g) << ','
           << cell(r.a) << ',' << cell(r.b) << ',' << cell(r.alpha) << ',' << cell(r.p) << ','
           << cell(r.q) << ',' << cell(r.lhs) << ',' << cell(r.mid) << ',' << cell(r.rhs) << ','
           << cell(r.observed) << ',' << cell(r.bound) << ',' << cell(r.margin_lower) << ','
           << cell(r.margin_upper) << ',' << cell(r.slack) << ',' << cell(r.error_budget) << ','
           << to_string(r.status) << ',' << r.evaluations << ',' << r.seed << '\n';
    }
}

void write_text(std::ostream& os, const std::vector<Row>& rows) {
    auto field = [&os](const char* name, const std::optional<double>& v) {
        if (v) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %s=%.10g", name, *v);
            os << buf;
        }
    };
    for (const Row& r : rows) {
        os << r.theorem;
        if (!r.f.empty()) {
            os << " f=" << r.f;
        }
        if (!r.g.empty()) {
            os << " g=" << r.g;
        }
        if (r.a && r.b) {
            os << " [" << number(*r.a) << ", " << number(*r.b) << "]";
        }
        field("alpha", r.alpha);
        field("p", r.p);
        field("q", r.q);
        os << " :";
        field("lhs", r.lhs);
        field("mid", r.mid);
        field("rhs", r.rhs);
        field("observed", r.observed);
        field("bound", r.bound);
        field("slack", r.slack);
        field("budget", r.error_budget);
        os << " -> " << to_string(r.status);
        if (!r.hypotheses_met) {
            os << " (hypotheses unmet)";
        }
        if (!r.note.empty()) {
            os << "  # " << r.note;
        }
        os << '\n';
    }
}

void write_rows(std::ostream& os, const RunConfig& config, const std::vector<Row>& rows) {
    switch (config.format) {
    case Format::Json:
        write_json(os, config, rows);
        break;
    case Format::Csv:
        write_csv(os, rows);
        break;
    case Format::Text:
        write_text(os, rows);
        break;
    }
}

} // namespace frachh::cli
