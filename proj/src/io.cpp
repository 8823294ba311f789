#include "symsig/io.hpp"

#include <fstream>
#include <sstream>

namespace symsig {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

struct HeaderLine {
    std::string key;
    std::string rest;
};

std::vector<HeaderLine> header_lines(const std::string& text) {
    std::vector<HeaderLine> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto space = line.find_first_of(" \t");
        if (space == std::string::npos) {
            out.push_back({line, ""});
        } else {
            out.push_back({line.substr(0, space), trim(line.substr(space + 1))});
        }
    }
    return out;
}

unsigned long parse_ulong(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("expected a number for " + what + ", got '" + s + "'");
    }
}

}  // namespace

RingFileData read_ring_text(const std::string& text, std::optional<std::uint64_t> char_override) {
    std::vector<std::string> vars;
    std::uint64_t characteristic = 0;
    bool have_char = false;
    unsigned conductor = 0;
    BaseOrder order = BaseOrder::grevlex;
    std::vector<std::string> poly_texts;

    for (const auto& line : header_lines(text)) {
        if (line.key == "vars") {
            vars = split_words(line.rest);
        } else if (line.key == "char") {
            characteristic = parse_ulong(line.rest, "char");
            have_char = true;
        } else if (line.key == "cyclotomic") {
            conductor = static_cast<unsigned>(parse_ulong(line.rest, "cyclotomic"));
        } else if (line.key == "order") {
            if (line.rest == "grevlex") {
                order = BaseOrder::grevlex;
            } else if (line.rest == "lex") {
                order = BaseOrder::lex;
            } else {
                throw InputError("unknown monomial order '" + line.rest + "'");
            }
        } else if (line.key == "poly") {
            poly_texts.push_back(line.rest);
        } else {
            throw InputError("unknown ring-file directive '" + line.key + "'");
        }
    }
    if (vars.empty()) throw InputError("ring file declares no variables ('vars ...' line missing)");
    if (conductor > 0 && have_char && characteristic != 0)
        throw InputError("a cyclotomic field has characteristic 0; drop the 'char' line");
    if (char_override) {
        if (conductor > 0 && *char_override != 0)
            throw InputError("--char cannot override a cyclotomic ring file");
        characteristic = *char_override;
    }

    FieldRef field;
    if (conductor > 0) {
        field = FieldDescriptor::cyclotomic(conductor);
    } else if (characteristic == 0) {
        field = FieldDescriptor::rationals();
    } else {
        field = FieldDescriptor::prime_field(characteristic);
    }
    RingFileData out;
    out.ring = PolyRing::make(vars, field, order);
    for (const auto& t : poly_texts) out.polys.push_back(parse_polynomial(t, out.ring));
    return out;
}

RingFileData read_ring_file(const std::string& path, std::optional<std::uint64_t> char_override) {
    return read_ring_text(read_file(path), char_override);
}

namespace {

/// Parses [[e, e, ...], [...], ...] where entries are coefficient expressions.
Matrix parse_matrix_literal(const std::string& s, FieldRef field, std::size_t dim) {
    Matrix m;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw InputError("matrix literal: expected '" + std::string(1, c) + "' in " + s);
        ++i;
    };
    expect('[');
    bool first_row = true;
    while (true) {
        skip_ws();
        if (i < s.size() && s[i] == ']') {
            ++i;
            break;
        }
        if (!first_row) expect(',');
        first_row = false;
        expect('[');
        std::vector<FieldElement> row;
        std::size_t start = i;
        while (i < s.size() && s[i] != ']') {
            if (s[i] == ',') {
                row.push_back(parse_field_element(s.substr(start, i - start), field));
                ++i;
                start = i;
            } else {
                ++i;
            }
        }
        if (i >= s.size()) throw InputError("matrix literal: unterminated row in " + s);
        row.push_back(parse_field_element(s.substr(start, i - start), field));
        ++i;  // closing ']'
        m.push_back(std::move(row));
    }
    skip_ws();
    if (i != s.size()) throw InputError("matrix literal: trailing characters in " + s);
    if (m.size() != dim) throw InputError("matrix has " + std::to_string(m.size()) +
                                          " rows, expected " + std::to_string(dim));
    for (const auto& row : m)
        if (row.size() != dim)
            throw InputError("matrix row has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(dim));
    return m;
}

}  // namespace

GroupFileData read_group_text(const std::string& text) {
    GroupFileData out;
    unsigned conductor = 0;
    std::vector<std::string> generator_texts;
    for (const auto& line : header_lines(text)) {
        if (line.key == "n") {
            out.dim = parse_ulong(line.rest, "n");
        } else if (line.key == "cyclotomic" || line.key == "cyclotomic_order") {
            conductor = static_cast<unsigned>(parse_ulong(line.rest, "cyclotomic_order"));
        } else if (line.key == "cap") {
            out.cap = parse_ulong(line.rest, "cap");
        } else if (line.key == "generator") {
            generator_texts.push_back(line.rest);
        } else {
            throw InputError("unknown group-file directive '" + line.key + "'");
        }
    }
    if (out.dim == 0) throw InputError("group file declares no dimension ('n ...' line missing)");
    if (generator_texts.empty()) throw InputError("group file declares no generators");
    out.field = conductor > 0 ? FieldDescriptor::cyclotomic(conductor)
                              : FieldDescriptor::rationals();
    for (const auto& t : generator_texts)
        out.generators.push_back(parse_matrix_literal(t, out.field, out.dim));
    return out;
}

GroupFileData read_group_file(const std::string& path) { return read_group_text(read_file(path)); }

}  // namespace symsig
