// Text round-trip for one-factors and factorisations. A factor serializes to
// a token listing its edges smaller endpoint first, ascending by first
// endpoint ("abcdefgh..." style for n <= 26, "0-1.2-3..." beyond that); a
// factorisation serializes to its n-1 factor tokens in ascending token order,
// one line per factorisation. Parsing is insensitive to whitespace layout:
// the token stream is chunked into records, so reflowed or wrapped catalogue
// files read back identically.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "p1f/core.hpp"

namespace p1f {

std::string factor_token(const OneFactor& f);
OneFactor parse_factor_token(std::string_view token);

std::string emit_line(const Factorisation& f);
Factorisation parse_line(std::string_view text);

// Splits text into whitespace-separated tokens, dropping '#' comments that
// start a line. Used by the record readers below and handy in tests.
std::vector<std::string> tokenize(std::string_view text);

// Reads every factorisation record from a token stream. The first token fixes
// the order n and the record length n-1; the stream must divide evenly into
// records. Tokens are checked in position, so errors carry the token index.
std::vector<Factorisation> read_catalogue(std::istream& in);
std::vector<Factorisation> read_catalogue_file(const std::string& path);
std::vector<Factorisation> parse_catalogue(std::string_view text);

}  // namespace p1f
