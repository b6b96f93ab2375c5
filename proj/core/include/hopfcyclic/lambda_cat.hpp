#ifndef HOPFCYCLIC_LAMBDA_CAT_HPP
#define HOPFCYCLIC_LAMBDA_CAT_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hopfcyclic {

enum class CategoryFlavor { LambdaPlus, LambdaN, LambdaZ, Lambda };

inline std::string flavor_name(CategoryFlavor f) {
    switch (f) {
        case CategoryFlavor::LambdaPlus: return "LambdaPlus";
        case CategoryFlavor::LambdaN: return "LambdaN";
        case CategoryFlavor::LambdaZ: return "LambdaZ";
        case CategoryFlavor::Lambda: return "Lambda";
    }
    return "?";
}

namespace detail {

inline long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long mathmod(long a, long b) { return a - b * floordiv(a, b); }

} // namespace detail

// One generator letter. Degree labels follow the generator names:
// face d^n : [n] -> [n+1], degen s^n : [n+1] -> [n], twist t_n : [n] -> [n].
struct Letter {
    enum class Op { face, degen, twist };
    Op op;
    long degree;
    long index; // face/degen position, or twist exponent

    long source() const { return op == Op::degen ? degree + 1 : degree; }
    long target() const { return op == Op::face ? degree + 1 : degree; }

    std::string display() const {
        char c = op == Op::face ? 'd' : (op == Op::degen ? 's' : 't');
        char sep = op == Op::twist ? '^' : '_';
        return std::string(1, c) + std::to_string(degree) + sep + std::to_string(index);
    }

    bool operator==(const Letter& o) const {
        return op == o.op && degree == o.degree && index == o.index;
    }
};

// Letters in application order right-to-left: the leftmost letter acts last.
struct GeneratorWord {
    CategoryFlavor flavor;
    long source;
    std::vector<Letter> letters;

    long target() const { return letters.empty() ? source : letters.front().target(); }
};

namespace detail {

inline void check_letter_ranges(const Letter& l, CategoryFlavor flavor) {
    if (l.degree < 0) throw RangeError("negative degree in " + l.display());
    switch (l.op) {
        case Letter::Op::face: {
            long top = flavor == CategoryFlavor::LambdaPlus ? l.degree : l.degree + 1;
            if (l.index < 0 || l.index > top)
                throw RangeError("face index out of range in " + l.display() + " for " + flavor_name(flavor));
            break;
        }
        case Letter::Op::degen:
            if (l.index < 0 || l.index > l.degree)
                throw RangeError("degeneracy index out of range in " + l.display());
            break;
        case Letter::Op::twist:
            if (flavor == CategoryFlavor::LambdaPlus && l.index != 0)
                throw RangeError("twist " + l.display() + " not admitted in LambdaPlus");
            if (flavor == CategoryFlavor::LambdaN && l.index < 0)
                throw RangeError("negative twist " + l.display() + " not admitted in LambdaN");
            break;
    }
}

} // namespace detail

inline void validate_word(const GeneratorWord& w) {
    if (w.source < 0) throw RangeError("negative source degree");
    for (const auto& l : w.letters) detail::check_letter_ranges(l, w.flavor);
    for (std::size_t k = 0; k + 1 < w.letters.size(); ++k)
        if (w.letters[k].source() != w.letters[k + 1].target())
            throw CompositionError("non-composable letters " + w.letters[k].display() + " * " +
                                   w.letters[k + 1].display());
    if (!w.letters.empty() && w.letters.back().source() != w.source)
        throw CompositionError("word source " + std::to_string(w.source) + " does not match last letter " +
                               w.letters.back().display());
}

inline std::string display_word(const GeneratorWord& w) {
    if (w.letters.empty()) return "id[" + std::to_string(w.source) + "]";
    std::string out;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k) out += " * ";
        out += w.letters[k].display();
    }
    return out;
}

inline GeneratorWord parse_word(const std::string& text, CategoryFlavor flavor) {
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    auto parse_long = [&](const std::string& s, const char* what) -> long {
        if (s.empty()) throw FormatError(std::string("missing ") + what);
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (...) {
            throw FormatError(std::string("bad ") + what + ": '" + s + "'");
        }
        if (pos != s.size()) throw FormatError(std::string("bad ") + what + ": '" + s + "'");
        return v;
    };

    std::string t = trim(text);
    if (t.size() >= 4 && t.substr(0, 3) == "id[" && t.back() == ']') {
        long n = parse_long(t.substr(3, t.size() - 4), "identity degree");
        if (n < 0) throw RangeError("negative identity degree");
        return GeneratorWord{flavor, n, {}};
    }

    std::vector<Letter> letters;
    std::size_t start = 0;
    while (start <= t.size()) {
        std::size_t star = t.find('*', start);
        std::string tok = trim(star == std::string::npos ? t.substr(start) : t.substr(start, star - start));
        if (tok.empty()) throw FormatError("empty letter in word: '" + text + "'");
        Letter l{};
        switch (tok[0]) {
            case 'd': l.op = Letter::Op::face; break;
            case 's': l.op = Letter::Op::degen; break;
            case 't': l.op = Letter::Op::twist; break;
            default: throw FormatError("unknown generator '" + tok + "'");
        }
        std::size_t sep = tok.find_first_of("_^", 1);
        if (sep == std::string::npos) throw FormatError("missing index separator in '" + tok + "'");
        l.degree = parse_long(tok.substr(1, sep - 1), "degree");
        l.index = parse_long(tok.substr(sep + 1), "index");
        detail::check_letter_ranges(l, flavor);
        letters.push_back(l);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    if (letters.empty()) throw FormatError("empty word");

    GeneratorWord w{flavor, letters.back().source(), std::move(letters)};
    validate_word(w);
    return w;
}

// Unique factorization: faces (indices strictly decreasing left to right),
// then degeneracies (strictly increasing), then a single twist at the source.
struct LambdaMorphism {
    CategoryFlavor flavor;
    long source;
    long target;
    std::vector<long> faces;
    std::vector<long> degens;
    long twist = 0;

    bool is_identity() const { return faces.empty() && degens.empty() && twist == 0; }

    GeneratorWord to_word() const {
        GeneratorWord w{flavor, source, {}};
        long r = static_cast<long>(faces.size());
        long s = static_cast<long>(degens.size());
        for (long k = 0; k < r; ++k)
            w.letters.push_back(Letter{Letter::Op::face, target - 1 - k, faces[static_cast<std::size_t>(k)]});
        for (long k = 0; k < s; ++k)
            w.letters.push_back(Letter{Letter::Op::degen, source - s + k, degens[static_cast<std::size_t>(k)]});
        if (twist != 0) w.letters.push_back(Letter{Letter::Op::twist, source, twist});
        return w;
    }

    std::string display() const { return display_word(to_word()); }

    bool operator==(const LambdaMorphism& o) const {
        return flavor == o.flavor && source == o.source && target == o.target && faces == o.faces &&
               degens == o.degens && twist == o.twist;
    }
};

// Chooses which redex to contract; receives the ascending list of redex
// positions. The result of rewriting does not depend on the choice.
using RedexPolicy = std::function<std::size_t(const std::vector<std::size_t>&)>;

inline std::size_t leftmost_policy(const std::vector<std::size_t>&) { return 0; }

namespace detail {

inline void cleanup_letters(CategoryFlavor flavor, std::vector<Letter>& ls) {
    std::vector<Letter> out;
    out.reserve(ls.size());
    for (auto l : ls) {
        if (l.op == Letter::Op::twist) {
            if (flavor == CategoryFlavor::Lambda) l.index = mathmod(l.index, l.degree + 1);
            if (l.index == 0) continue;
        }
        out.push_back(l);
    }
    ls = std::move(out);
}

inline bool is_redex(const Letter& a, const Letter& b) {
    using Op = Letter::Op;
    if (a.op == Op::face) return b.op == Op::face && a.index <= b.index;
    if (a.op == Op::degen) return b.op == Op::face || (b.op == Op::degen && a.index >= b.index);
    return true; // a twist letter moves right past anything
}

inline std::vector<std::size_t> find_redexes(const std::vector<Letter>& ls) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < ls.size(); ++k)
        if (is_redex(ls[k], ls[k + 1])) out.push_back(k);
    return out;
}

// Rewrites the pair (ls[k], ls[k+1]) by the one relation that applies.
// Every rule either removes letters, sorts face/degeneracy indices, or
// moves a twist toward the source, so any contraction order terminates.
inline void contract(std::vector<Letter>& ls, std::size_t k) {
    using Op = Letter::Op;
    Letter a = ls[k], b = ls[k + 1];
    auto replace_pair = [&](std::vector<Letter> repl) {
        ls.erase(ls.begin() + static_cast<long>(k), ls.begin() + static_cast<long>(k) + 2);
        ls.insert(ls.begin() + static_cast<long>(k), repl.begin(), repl.end());
    };

    if (a.op == Op::face && b.op == Op::face) {
        // d_i d_j = d_{j+1} d_i for i <= j
        replace_pair({Letter{Op::face, a.degree, b.index + 1}, Letter{Op::face, b.degree, a.index}});
        return;
    }
    if (a.op == Op::degen && b.op == Op::degen) {
        // s_j s_i = s_i s_{j+1} for i <= j
        replace_pair({Letter{Op::degen, a.degree, b.index}, Letter{Op::degen, b.degree, a.index + 1}});
        return;
    }
    if (a.op == Op::degen && b.op == Op::face) {
        long i = a.index, j = b.index;
        if (j == i || j == i + 1) {
            replace_pair({});
        } else if (j < i) {
            replace_pair({Letter{Op::face, a.degree - 1, j}, Letter{Op::degen, a.degree - 1, i - 1}});
        } else {
            replace_pair({Letter{Op::face, a.degree - 1, j - 1}, Letter{Op::degen, a.degree - 1, i}});
        }
        return;
    }
    if (a.op == Op::twist && b.op == Op::twist) {
        replace_pair({Letter{Op::twist, a.degree, a.index + b.index}});
        return;
    }
    if (a.op == Op::twist && b.op == Op::face) {
        // t^s d_q = d_j t^i with i+j = (n+1)p + q and i+p = s, at face degree n
        long n = b.degree;
        long s = a.index, q = b.index;
        if (q == n + 1) { ++s; q = 0; } // top face folds into the twist
        long p = floordiv(s - q + n + 1, n + 2);
        long i = s - p;
        long j = (n + 2) * p + q - s;
        std::vector<Letter> repl{Letter{Op::face, n, j}};
        if (i != 0) repl.push_back(Letter{Op::twist, n, i});
        replace_pair(std::move(repl));
        return;
    }
    if (a.op == Op::twist && b.op == Op::degen) {
        // t^i s_j = s_q t^{i+p} with -i+j = (n+1)(-p) + q, at twist degree n
        long n = a.degree;
        long i = a.index, j = b.index;
        long q = mathmod(j - i, n + 1);
        long p = (i + q - j) / (n + 1);
        std::vector<Letter> repl{Letter{Op::degen, n, q}};
        if (i + p != 0) repl.push_back(Letter{Op::twist, n + 1, i + p});
        replace_pair(std::move(repl));
        return;
    }
    throw std::logic_error("contract called on a non-redex");
}

} // namespace detail

inline LambdaMorphism normal_form_with_policy(const GeneratorWord& w, const RedexPolicy& pick) {
    validate_word(w);
    std::vector<Letter> ls = w.letters;
    detail::cleanup_letters(w.flavor, ls);
    for (;;) {
        auto redexes = detail::find_redexes(ls);
        if (redexes.empty()) break;
        std::size_t choice = pick(redexes);
        if (choice >= redexes.size()) throw RangeError("redex policy returned an out-of-range choice");
        detail::contract(ls, redexes[choice]);
        detail::cleanup_letters(w.flavor, ls);
    }

    LambdaMorphism m{w.flavor, w.source, w.target(), {}, {}, 0};
    std::size_t k = 0;
    while (k < ls.size() && ls[k].op == Letter::Op::face) m.faces.push_back(ls[k++].index);
    while (k < ls.size() && ls[k].op == Letter::Op::degen) m.degens.push_back(ls[k++].index);
    if (k < ls.size() && ls[k].op == Letter::Op::twist) m.twist = ls[k++].index;
    if (k != ls.size()) throw std::logic_error("rewriting left a non-normal word: " + display_word({w.flavor, w.source, ls}));
    return m;
}

inline LambdaMorphism normal_form(const GeneratorWord& w) {
    return normal_form_with_policy(w, leftmost_policy);
}

inline LambdaMorphism compose(const LambdaMorphism& f, const LambdaMorphism& g) {
    if (f.flavor != g.flavor)
        throw CompositionError("flavor mismatch: " + flavor_name(f.flavor) + " vs " + flavor_name(g.flavor));
    if (f.source != g.target)
        throw CompositionError("compose degree mismatch: source " + std::to_string(f.source) +
                               " vs target " + std::to_string(g.target));
    GeneratorWord fw = f.to_word();
    GeneratorWord gw = g.to_word();
    GeneratorWord joined{f.flavor, g.source, {}};
    joined.letters = fw.letters;
    joined.letters.insert(joined.letters.end(), gw.letters.begin(), gw.letters.end());
    return normal_form(joined);
}

inline bool equal(const LambdaMorphism& f, const LambdaMorphism& g) { return f == g; }

// Both sides of every defining relation, instantiated at source degrees
// small enough that all letters stay within max_degree. Twist exponents run
// through 0..2(n+1), and negative exponents are included for LambdaZ.
inline std::vector<std::pair<GeneratorWord, GeneratorWord>> relation_instances(CategoryFlavor flavor,
                                                                               long max_degree) {
    using Op = Letter::Op;
    std::vector<std::pair<GeneratorWord, GeneratorWord>> out;
    const bool plus = flavor == CategoryFlavor::LambdaPlus;
    auto word = [&](long source, std::vector<Letter> ls) {
        GeneratorWord w{flavor, source, std::move(ls)};
        validate_word(w);
        return w;
    };

    for (long n = 0; n + 2 <= max_degree; ++n) {
        long ftop = plus ? n : n + 1;
        for (long i = 0; i <= ftop; ++i)
            for (long j = i; j <= ftop; ++j) {
                if (plus && j + 1 > n + 1) continue;
                out.emplace_back(word(n, {Letter{Op::face, n + 1, i}, Letter{Op::face, n, j}}),
                                 word(n, {Letter{Op::face, n + 1, j + 1}, Letter{Op::face, n, i}}));
            }
    }

    for (long n = 1; n + 1 <= max_degree; ++n)
        for (long i = 0; i <= n - 1; ++i)
            for (long j = i; j <= n - 1; ++j)
                out.emplace_back(word(n + 1, {Letter{Op::degen, n - 1, j}, Letter{Op::degen, n, i}}),
                                 word(n + 1, {Letter{Op::degen, n - 1, i}, Letter{Op::degen, n, j + 1}}));

    for (long n = 0; n + 1 <= max_degree; ++n)
        for (long i = 0; i <= n; ++i) {
            out.emplace_back(word(n, {Letter{Op::degen, n, i}, Letter{Op::face, n, i}}), word(n, {}));
            if (!plus || i + 1 <= n)
                out.emplace_back(word(n, {Letter{Op::degen, n, i}, Letter{Op::face, n, i + 1}}), word(n, {}));
        }

    for (long n = 0; n + 2 <= max_degree; ++n) {
        long ftop = plus ? n : n + 1;
        for (long i = 0; i <= ftop; ++i)
            for (long j = 0; j <= n; ++j) {
                auto lhs = word(n + 1, {Letter{Op::face, n, i}, Letter{Op::degen, n, j}});
                auto rhs = i <= j ? word(n + 1, {Letter{Op::degen, n + 1, j + 1}, Letter{Op::face, n + 1, i}})
                                  : word(n + 1, {Letter{Op::degen, n + 1, j}, Letter{Op::face, n + 1, i + 1}});
                out.emplace_back(std::move(lhs), std::move(rhs));
            }
    }

    if (plus) return out;

    std::vector<long> exponents;
    auto exponent_range = [&](long n) {
        exponents.clear();
        for (long e = 0; e <= 2 * (n + 1); ++e) exponents.push_back(e);
        if (flavor == CategoryFlavor::LambdaZ)
            for (long e = -2 * (n + 1); e < 0; ++e) exponents.push_back(e);
    };

    for (long n = 0; n <= max_degree; ++n) {
        exponent_range(n);
        for (long s : exponents)
            for (long t : exponents)
                out.emplace_back(word(n, {Letter{Op::twist, n, s}, Letter{Op::twist, n, t}}),
                                 word(n, {Letter{Op::twist, n, s + t}}));
    }

    for (long n = 0; n + 1 <= max_degree; ++n) {
        exponent_range(n);
        for (long i : exponents)
            for (long j = 0; j <= n + 1; ++j) {
                long q = detail::mathmod(i + j, n + 1);
                long p = detail::floordiv(i + j, n + 1);
                out.emplace_back(word(n, {Letter{Op::face, n, j}, Letter{Op::twist, n, i}}),
                                 word(n, {Letter{Op::twist, n + 1, i + p}, Letter{Op::face, n, q}}));
            }
        for (long i : exponents)
            for (long j = 0; j <= n; ++j) {
                long q = detail::mathmod(j - i, n + 1);
                long p = (i + q - j) / (n + 1);
                out.emplace_back(word(n + 1, {Letter{Op::twist, n, i}, Letter{Op::degen, n, j}}),
                                 word(n + 1, {Letter{Op::degen, n, q}, Letter{Op::twist, n + 1, i + p}}));
            }
    }

    if (flavor == CategoryFlavor::Lambda)
        for (long n = 0; n <= max_degree; ++n)
            out.emplace_back(word(n, {Letter{Op::twist, n, n + 1}}), word(n, {}));

    return out;
}

} // namespace hopfcyclic

#endif
