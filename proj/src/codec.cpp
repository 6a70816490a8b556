#include "p1f/codec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace p1f {
namespace {

bool is_numeric_token(std::string_view tok) {
    return tok.find('-') != std::string_view::npos;
}

[[noreturn]] void token_error(std::string_view token, const std::string& what) {
    throw Error("bad factor token \"" + std::string(token) + "\": " + what);
}

OneFactor parse_letter_token(std::string_view token) {
    int n = static_cast<int>(token.size());
    check_order(n);
    std::vector<Vertex> partner(n, -1);
    for (int i = 0; i + 1 < n; i += 2) {
        char clo = token[i], chi = token[i + 1];
        if (clo < 'a' || clo >= 'a' + n || chi < 'a' || chi >= 'a' + n)
            token_error(token, std::string("letter out of range for order ") + std::to_string(n));
        Vertex lo = clo - 'a', hi = chi - 'a';
        if (lo >= hi) token_error(token, "edge " + std::string{clo, chi} + " not smaller-first");
        if (partner[lo] != -1 || partner[hi] != -1)
            token_error(token, std::string("vertex ") + (partner[lo] != -1 ? clo : chi) +
                                   " appears twice");
        if (i > 0 && token[i - 2] >= clo)
            token_error(token, "edges not ascending by first endpoint");
        partner[lo] = hi;
        partner[hi] = lo;
    }
    return OneFactor(n, std::move(partner));
}

OneFactor parse_numeric_token(std::string_view token) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos == start) token_error(token, "expected a number at position " + std::to_string(start));
        return std::stoi(std::string(token.substr(start, pos - start)));
    };
    auto expect = [&](char c) {
        if (pos >= token.size() || token[pos] != c)
            token_error(token, std::string("expected '") + c + "' at position " + std::to_string(pos));
        ++pos;
    };
    while (true) {
        int lo = read_int();
        expect('-');
        int hi = read_int();
        edges.emplace_back(lo, hi);
        if (pos == token.size()) break;
        expect('.');
    }
    int n = 2 * static_cast<int>(edges.size());
    check_order(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [lo, hi] = edges[i];
        if (lo >= hi) token_error(token, "edge not smaller-first");
        if (hi >= n) token_error(token, "vertex " + std::to_string(hi) + " out of range");
        if (i > 0 && edges[i - 1].first >= lo)
            token_error(token, "edges not ascending by first endpoint");
    }
    return OneFactor::from_edges(n, edges);
}

}  // namespace

std::string factor_token(const OneFactor& f) {
    int n = f.order();
    std::string out;
    if (n <= 26) {
        out.reserve(n);
        for (auto [lo, hi] : f.edge_list()) {
            out += static_cast<char>('a' + lo);
            out += static_cast<char>('a' + hi);
        }
    } else {
        for (auto [lo, hi] : f.edge_list()) {
            if (!out.empty()) out += '.';
            out += std::to_string(lo) + "-" + std::to_string(hi);
        }
    }
    return out;
}

OneFactor parse_factor_token(std::string_view token) {
    if (token.empty()) throw Error("empty factor token");
    return is_numeric_token(token) ? parse_numeric_token(token) : parse_letter_token(token);
}

std::string emit_line(const Factorisation& f) {
    std::string out;
    for (int k = 0; k < f.num_factors(); ++k) {
        if (k) out += ' ';
        out += factor_token(f.factor(k));
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        } else if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            tokens.emplace_back(text.substr(start, i - start));
        }
    }
    return tokens;
}

namespace {

Factorisation record_from_tokens(const std::vector<std::string>& tokens, std::size_t first,
                                 int n) {
    std::vector<OneFactor> factors;
    factors.reserve(n - 1);
    for (int k = 0; k < n - 1; ++k) {
        const auto& tok = tokens[first + k];
        OneFactor f = [&] {
            try {
                return parse_factor_token(tok);
            } catch (const Error& e) {
                throw Error("token " + std::to_string(first + k + 1) + ": " + e.what());
            }
        }();
        if (f.order() != n)
            throw Error("token " + std::to_string(first + k + 1) + ": order " +
                        std::to_string(f.order()) + " in a record of order " + std::to_string(n));
        if (k > 0 && !(factors.back() < f))
            throw Error("token " + std::to_string(first + k + 1) +
                        ": factors not in ascending token order");
        factors.push_back(std::move(f));
    }
    return Factorisation(n, std::move(factors));
}

std::vector<Factorisation> records_from_tokens(const std::vector<std::string>& tokens) {
    std::vector<Factorisation> out;
    if (tokens.empty()) return out;
    int n = parse_factor_token(tokens[0]).order();
    if (tokens.size() % (n - 1) != 0)
        throw Error("token stream of " + std::to_string(tokens.size()) +
                    " tokens does not divide into records of " + std::to_string(n - 1));
    for (std::size_t first = 0; first < tokens.size(); first += n - 1)
        out.push_back(record_from_tokens(tokens, first, n));
    return out;
}

}  // namespace

Factorisation parse_line(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw Error("no tokens in line");
    int n = parse_factor_token(tokens[0]).order();
    if (static_cast<int>(tokens.size()) != n - 1)
        throw Error("expected " + std::to_string(n - 1) + " tokens for order " + std::to_string(n) +
                    ", got " + std::to_string(tokens.size()));
    return record_from_tokens(tokens, 0, n);
}

std::vector<Factorisation> parse_catalogue(std::string_view text) {
    return records_from_tokens(tokenize(text));
}

std::vector<Factorisation> read_catalogue(std::istream& in) {
    std::ostringstream all;
    all << in.rdbuf();
    return parse_catalogue(all.str());
}

std::vector<Factorisation> read_catalogue_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return read_catalogue(in);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

}  // namespace p1f
