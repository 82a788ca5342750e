#include "twobridge/arith.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace twobridge {

namespace {

Int floor_div(const Int& a, const Int& b) {
    // b > 0 throughout this module (denominators are normalized positive).
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int parse_int(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw DomainError("empty integer in \"" + std::string(text) + "\"");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw DomainError("bad integer \"" + std::string(text) + "\"");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw DomainError("bad integer \"" + std::string(text) + "\"");
    }
    return Int(std::string(s));
}

}  // namespace

Fraction::Fraction(Int num, Int den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g = gcd(abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Fraction Fraction::reciprocal() const {
    if (num_ == 0) throw DivisionByZero("reciprocal of zero");
    return Fraction(den_, num_);
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction Fraction::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw DomainError("expected \"beta/alpha\", got \"" + std::string(text) + "\"");
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    return Fraction(std::move(num), std::move(den));
}

std::string Fraction::str() const { return num_.str() + "/" + den_.str(); }

Expansion::Expansion(std::vector<Int> t, Int r0) : integer_part(std::move(r0)), terms(std::move(t)) {
    for (const Int& b : terms) {
        if (b == 0) throw DomainError("expansion term must be nonzero");
    }
}

bool Expansion::is_positive() const {
    if (integer_part != 0 || terms.empty()) return false;
    for (const Int& b : terms) {
        if (b < 1) return false;
    }
    return terms.back() >= 2;
}

bool operator<(const Expansion& a, const Expansion& b) {
    if (a.integer_part != b.integer_part) return a.integer_part < b.integer_part;
    return std::lexicographical_compare(a.terms.begin(), a.terms.end(), b.terms.begin(),
                                        b.terms.end());
}

Expansion Expansion::parse(std::string_view text) {
    auto open = text.find('[');
    auto close = text.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw DomainError("expected \"[b1,b2,...]\", got \"" + std::string(text) + "\"");
    Int r0 = 0;
    if (open > 0) {
        std::string_view prefix = text.substr(0, open);
        if (prefix.empty() || prefix.back() != '+')
            throw DomainError("expected \"r0+[...]\", got \"" + std::string(text) + "\"");
        r0 = parse_int(prefix.substr(0, prefix.size() - 1));
    }
    if (close + 1 != text.size()) {
        std::string_view tail = text.substr(close + 1);
        for (char c : tail) {
            if (!std::isspace(static_cast<unsigned char>(c)))
                throw DomainError("trailing characters in \"" + std::string(text) + "\"");
        }
    }
    std::vector<Int> terms;
    std::string_view body = text.substr(open + 1, close - open - 1);
    bool only_space = true;
    for (char c : body) {
        if (!std::isspace(static_cast<unsigned char>(c))) only_space = false;
    }
    if (!only_space) {
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            std::string_view piece =
                comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
            terms.push_back(parse_int(piece));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return Expansion(std::move(terms), std::move(r0));
}

std::string Expansion::str() const {
    std::string out;
    if (integer_part != 0) out += integer_part.str() + "+";
    out += "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out += ",";
        out += terms[i].str();
    }
    out += "]";
    return out;
}

Fraction cf_value(const Expansion& e) {
    if (e.terms.empty()) return Fraction(e.integer_part, 1);
    Fraction tail(e.terms.back(), 1);
    for (auto it = e.terms.rbegin() + 1; it != e.terms.rend(); ++it) {
        if (tail.num() == 0) throw DivisionByZero("intermediate denominator vanishes");
        tail = Fraction(*it, 1) + tail.reciprocal();
    }
    if (tail.num() == 0) throw DivisionByZero("intermediate denominator vanishes");
    return Fraction(e.integer_part, 1) + tail.reciprocal();
}

Expansion positive_expansion(const Fraction& f) {
    if (!(f.num() > 0 && f.num() < f.den()))
        throw DomainError("positive expansion needs 0 < f < 1, got " + f.str());
    // Euclidean quotients of den/num. The final quotient is automatically
    // >= 2 because remainders strictly decrease.
    Int a = f.den();
    Int b = f.num();
    std::vector<Int> terms;
    while (b != 0) {
        terms.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
    }
    return Expansion(std::move(terms));
}

Expansion even_expansion(const Fraction& f) {
    if (f.num() == 0 || abs(f.num()) >= f.den())
        throw DomainError("even expansion needs f in (-1,1) \\ {0}, got " + f.str());
    if (f.num() % 2 != 0)
        throw DomainError("no all-even expansion: numerator of " + f.str() + " is odd");
    // Greedy even quotients. Of the two integers within distance 1 of the
    // reciprocal, exactly one is even, and parity of the remainders keeps
    // the choice valid until the remainder vanishes.
    Fraction cur = f;
    std::vector<Int> terms;
    while (true) {
        Fraction v = cur.reciprocal();
        Int fl = floor_div(v.num(), v.den());
        Int m = (fl % 2 == 0) ? fl : fl + 1;
        terms.push_back(m);
        Fraction rest = v - Fraction(m, 1);
        if (rest.num() == 0) break;
        cur = rest;
    }
    return Expansion(std::move(terms));
}

bool same_knot_class(const Fraction& a, const Fraction& b) {
    if (a.den() != b.den())
        throw DomainError("cannot compare knot classes across denominators " + a.den().str() +
                          " and " + b.den().str());
    return (a.num() - b.num()) % a.den() == 0;
}

namespace {

void ht_dfs(const Fraction& target, std::size_t max_len, std::vector<Int>& prefix,
            std::set<Expansion>& out) {
    // target is the residual tail value: nonzero, strictly inside (-1,1).
    if (prefix.size() >= max_len) return;
    Fraction v = target.reciprocal();
    Int fl = floor_div(v.num(), v.den());
    for (int step = 0; step < 2; ++step) {
        Int b = fl + step;
        if (abs(b) < 2) continue;
        Fraction rest = v - Fraction(b, 1);
        if (abs(rest.num()) >= rest.den()) continue;
        prefix.push_back(b);
        if (rest.num() == 0) {
            out.insert(Expansion(prefix));
        } else {
            ht_dfs(rest, max_len, prefix, out);
        }
        prefix.pop_back();
    }
}

}  // namespace

std::set<Expansion> enumerate_ht_expansions(const Fraction& f, std::size_t max_len) {
    if (!(f.num() > 0 && f.num() < f.den()))
        throw DomainError("expansion enumeration needs 0 < f < 1, got " + f.str());
    std::set<Expansion> out;
    std::vector<Int> prefix;
    ht_dfs(f, max_len, prefix, out);
    ht_dfs(f - Fraction(1, 1), max_len, prefix, out);
    return out;
}

std::size_t default_search_depth(const Expansion& positive) {
    if (!positive.is_positive())
        throw DomainError("search depth is defined for positive expansions, got " + positive.str());
    Int total = Int(positive.terms.size());
    for (const Int& n : positive.terms) total += n;
    return static_cast<std::size_t>(total);
}

Fraction normalize_knot_fraction(const Fraction& f) {
    const Int& alpha = f.den();
    if (alpha < 3 || alpha % 2 == 0)
        throw DomainError("not a knot fraction (need odd alpha >= 3): " + f.str());
    Int beta = f.num() % alpha;
    if (beta < 0) beta += alpha;
    return Fraction(std::move(beta), alpha);
}

Fraction mirror_fraction(const Fraction& f) {
    Fraction k = normalize_knot_fraction(f);
    return Fraction(k.den() - k.num(), k.den());
}

Fraction inverse_representative(const Fraction& f) {
    Fraction k = normalize_knot_fraction(f);
    // Extended Euclid for beta^{-1} mod alpha; gcd(beta, alpha) = 1.
    Int r0 = k.den(), r1 = k.num();
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    Int inv = t0 % k.den();
    if (inv < 0) inv += k.den();
    return Fraction(std::move(inv), k.den());
}

Fraction canonical_class_representative(const Fraction& f) {
    Fraction k = normalize_knot_fraction(f);
    Fraction partner = inverse_representative(k);
    return partner.num() < k.num() ? partner : k;
}

}  // namespace twobridge
