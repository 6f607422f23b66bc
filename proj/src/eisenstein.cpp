#include "atgrid/eisenstein.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "atgrid/errors.hpp"

namespace atgrid {

std::pair<double, double> EisensteinInt::embed_complex() const noexcept {
    const double a = static_cast<double>(a_);
    const double b = static_cast<double>(b_);
    return {a - b / 2.0, b * std::sqrt(3.0) / 2.0};
}

EisensteinInt EisensteinInt::div_exact(const EisensteinInt& x, const EisensteinInt& y) {
    if (y.is_zero()) throw ExactnessError("division by zero in Z[w]");
    // x / y = x * conj(y) / norm(y); both components must divide exactly.
    const EisensteinInt num = x * y.conj();
    const std::int64_t n = y.norm();
    if (num.a() % n != 0 || num.b() % n != 0) {
        throw ExactnessError("inexact division in Z[w]: " + x.to_string() + " / " +
                             y.to_string());
    }
    return {num.a() / n, num.b() / n};
}

std::string EisensteinInt::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else {
        os << a_ << (b_ < 0 ? "-" : "+");
        std::int64_t mag = b_ < 0 ? -b_ : b_;  // NB: b_ == INT64_MIN cannot arise from checked ops
        os << mag << "w";
    }
    return os.str();
}

namespace {

// Accepted grammar (no interior whitespace):
//   INT | [INT] (+|-) [UINT] 'w' | [-] [UINT] 'w'
// so "5", "-3", "w", "-w", "2w", "0+1w", "-1-1w", "3-w" all parse.
bool parse_int(const std::string& s, std::size_t& pos, std::int64_t& out, bool require_digits) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_begin) {
        if (require_digits) {
            pos = start;
            return false;
        }
        // Sign only: magnitude 1.
        if (pos == start) return false;
        out = (s[start] == '-') ? -1 : 1;
        return true;
    }
    errno = 0;
    out = std::strtoll(s.substr(start, pos - start).c_str(), nullptr, 10);
    if (errno == ERANGE) throw ParseError("Eisenstein literal out of range: " + s);
    return true;
}

}  // namespace

EisensteinInt EisensteinInt::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty Eisenstein literal");

    // Bare w-term shorthands: "w", "+w", "-w".
    if (s == "w" || s == "+w") return {0, 1};
    if (s == "-w") return {0, -1};

    std::size_t pos = 0;
    std::int64_t first = 0;
    if (!parse_int(s, pos, first, /*require_digits=*/true))
        throw ParseError("bad Eisenstein literal: " + text);

    if (pos == s.size()) return {first, 0};
    if (s[pos] == 'w') {
        ++pos;
        if (pos != s.size()) throw ParseError("trailing characters in Eisenstein literal: " + text);
        return {0, first};
    }

    // first is the a-part; what follows must be a signed w-term.
    if (s[pos] != '+' && s[pos] != '-') throw ParseError("bad Eisenstein literal: " + text);
    std::int64_t second = 0;
    if (!parse_int(s, pos, second, /*require_digits=*/false))
        throw ParseError("bad Eisenstein literal: " + text);
    if (pos >= s.size() || s[pos] != 'w')
        throw ParseError("bad Eisenstein literal (missing w): " + text);
    ++pos;
    if (pos != s.size()) throw ParseError("trailing characters in Eisenstein literal: " + text);
    return {first, second};
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
    return os << x.to_string();
}

}  // namespace atgrid
