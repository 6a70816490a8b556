#include "p1f/develop.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "p1f/codec.hpp"

namespace p1f {

Relabelling parse_permutation(int n, std::string_view text) {
    Relabelling r = Relabelling::identity(n);
    std::vector<bool> seen(n, false);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') throw Error("expected '(' in permutation at position " +
                                          std::to_string(pos));
        ++pos;
        std::vector<Vertex> cycle;
        skip_space();
        while (pos < text.size() && text[pos] != ')') {
            Vertex v;
            if (n <= 26) {
                char c = text[pos];
                if (c < 'a' || c >= 'a' + n)
                    throw Error(std::string("letter '") + c + "' out of range for order " +
                                std::to_string(n));
                v = c - 'a';
                ++pos;
            } else {
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == start) throw Error("expected a vertex number in permutation");
                v = std::stoi(std::string(text.substr(start, pos - start)));
                if (v >= n) throw Error("vertex " + std::to_string(v) + " out of range");
            }
            if (seen[v])
                throw Error("vertex " + vertex_name(n, v) + " repeated in permutation");
            seen[v] = true;
            cycle.push_back(v);
            skip_space();
        }
        if (pos == text.size()) throw Error("unclosed cycle in permutation");
        ++pos;  // ')'
        for (std::size_t i = 0; i < cycle.size(); ++i)
            r.perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_space();
    }
    return r;
}

std::string permutation_cycles(const Relabelling& r) {
    int n = r.size();
    std::string out;
    std::vector<bool> seen(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v] || r.perm[v] == v) {
            seen[v] = true;
            continue;
        }
        out += '(';
        bool first = true;
        for (Vertex w = v; !seen[w]; w = r.perm[w]) {
            seen[w] = true;
            if (!first && n > 26) out += ' ';
            first = false;
            out += vertex_name(n, w);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

DevelopmentSpec parse_development_spec(std::string_view text) {
    std::string perm_text;
    std::vector<std::string> base_tokens, fixed_tokens;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (colon == std::string::npos)
            throw Error("line " + std::to_string(lineno) + ": expected `key: value`");
        std::string key = line.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string value = line.substr(colon + 1);
        if (key == "perm") {
            perm_text += value;
        } else if (key == "base" || key == "fixed") {
            auto& dst = key == "base" ? base_tokens : fixed_tokens;
            for (auto& tok : tokenize(value)) dst.push_back(std::move(tok));
        } else {
            throw Error("line " + std::to_string(lineno) + ": unknown key \"" + key + "\"");
        }
    }
    if (base_tokens.empty()) throw Error("development spec has no base factors");

    DevelopmentSpec spec;
    for (const auto& tok : base_tokens) spec.base_factors.push_back(parse_factor_token(tok));
    for (const auto& tok : fixed_tokens) spec.fixed_factors.push_back(parse_factor_token(tok));
    spec.n = spec.base_factors.front().order();
    for (const auto& f : spec.base_factors)
        if (f.order() != spec.n) throw Error("base factors of mixed order");
    for (const auto& f : spec.fixed_factors)
        if (f.order() != spec.n) throw Error("fixed factors of mixed order");
    spec.generator = parse_permutation(spec.n, perm_text);
    return spec;
}

DevelopmentSpec read_development_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream all;
    all << in.rdbuf();
    try {
        return parse_development_spec(all.str());
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

Factorisation develop(const DevelopmentSpec& spec) {
    int n = check_order(spec.n);
    long d = spec.generator.order();
    for (const auto& fx : spec.fixed_factors)
        if (apply(spec.generator, fx) != fx)
            throw Error("fixed factor " + factor_token(fx) + " is moved by the generator");

    std::vector<OneFactor> factors;
    for (const auto& base : spec.base_factors) {
        OneFactor img = base;
        for (long i = 0; i < d; ++i) {
            if (std::find(factors.begin(), factors.end(), img) != factors.end())
                throw Error("duplicate developed factor " + factor_token(img));
            factors.push_back(img);
            img = apply(spec.generator, img);
        }
    }
    for (const auto& fx : spec.fixed_factors) {
        if (std::find(factors.begin(), factors.end(), fx) != factors.end())
            throw Error("duplicate developed factor " + factor_token(fx));
        factors.push_back(fx);
    }
    if (static_cast<int>(factors.size()) != n - 1)
        throw Error("development yields " + std::to_string(factors.size()) + " factors, order " +
                    std::to_string(n) + " needs " + std::to_string(n - 1));

    std::vector<int> cover(edge_count(n), 0);
    for (const auto& f : factors)
        for (auto [u, v] : f.edge_list()) ++cover[edge_id(n, u, v)];
    for (int id = 0; id < edge_count(n); ++id)
        if (cover[id] != 1) {
            auto [u, v] = edge_of_id(n, id);
            throw Error("development does not partition the edges: edge " + edge_name(n, u, v) +
                        " covered " + std::to_string(cover[id]) + " times");
        }
    return Factorisation(n, std::move(factors));
}

}  // namespace p1f
