// word.hpp — reduced words over a symmetric free-group alphabet.
//
// Letters are nonzero ints: +k is the generator g_k, -k its inverse. A word
// is reduced when no adjacent pair cancels. Token grammar: the empty word is
// "e"; otherwise letters joined by '.', generator k printed "g<k>" and its
// inverse "G<k>" (e.g. "g1.G2.g1").
#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "endscope/errors.hpp"

namespace endscope {

using Letter = int;
using Word = std::vector<Letter>;

inline bool is_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == -w[i - 1]) return false;
    return true;
}

// Right-multiplies a reduced word by a reduced word, cancelling at the seam.
inline Word reduce_concat(const Word& a, const Word& b) {
    Word out = a;
    for (Letter x : b) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

// Full reduction of an arbitrary letter sequence.
inline Word reduce(const Word& w) { return reduce_concat({}, w); }

inline Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& x : out) x = -x;
    return out;
}

// u^-1 v, reduced. Strips the common prefix first.
inline Word left_quotient(const Word& u, const Word& v) {
    std::size_t common = 0;
    while (common < u.size() && common < v.size() && u[common] == v[common]) ++common;
    Word out;
    out.reserve((u.size() - common) + (v.size() - common));
    for (std::size_t i = u.size(); i > common; --i) out.push_back(-u[i - 1]);
    for (std::size_t i = common; i < v.size(); ++i) out.push_back(v[i]);
    return out; // already reduced: u,v reduced and first letters differ
}

inline std::string word_token(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        Letter x = w[i];
        out += x > 0 ? 'g' : 'G';
        out += std::to_string(x > 0 ? x : -x);
    }
    return out;
}

inline Word parse_word_token(const std::string& token) {
    if (token == "e") return {};
    Word out;
    std::size_t i = 0;
    while (i < token.size()) {
        char c = token[i];
        if (c != 'g' && c != 'G')
            throw InvalidConfigError("bad word token: " + token);
        ++i;
        std::size_t j = i;
        while (j < token.size() && token[j] != '.') ++j;
        int k = std::atoi(token.substr(i, j - i).c_str());
        if (k < 1) throw InvalidConfigError("bad generator index in word token: " + token);
        out.push_back(c == 'g' ? k : -k);
        i = j < token.size() ? j + 1 : j;
    }
    if (!is_reduced(out))
        throw InvalidConfigError("word token is not reduced: " + token);
    return out;
}

inline bool is_prefix(const Word& p, const Word& w) {
    if (p.size() > w.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != w[i]) return false;
    return true;
}

} // namespace endscope
