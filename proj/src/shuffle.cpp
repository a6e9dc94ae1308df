#include "wg/shuffle.hpp"

#include <algorithm>
#include <sstream>

#include "wg/errors.hpp"

namespace wg {

std::string sym_str(int sym, const Rank& r) {
    return sym_primed(sym, r) ? std::to_string(sym - r.n) + "'" : std::to_string(sym);
}

std::string shuffle_str(const Shuffle& s, const Rank& r) {
    std::string out = "(";
    for (size_t t = 0; t < s.seq.size(); ++t) {
        if (t) out += ",";
        out += sym_str(s.seq[t], r);
    }
    return out + ")";
}

bool is_valid_shuffle(const Shuffle& s, const Rank& r) {
    if (static_cast<int>(s.seq.size()) != r.n + r.m) return false;
    int next_plain = 1, next_primed = 1;
    for (int sym : s.seq) {
        if (sym < 1 || sym > r.n + r.m) return false;
        if (sym_primed(sym, r)) {
            if (sym_value(sym, r) != next_primed) return false;
            ++next_primed;
        } else {
            if (sym != next_plain) return false;
            ++next_plain;
        }
    }
    return next_plain == r.n + 1 && next_primed == r.m + 1;
}

Shuffle make_shuffle(std::vector<int> seq, const Rank& r) {
    require_diagram_rank(r);
    Shuffle s{std::move(seq)};
    if (!is_valid_shuffle(s, r))
        throw DomainError("not a shuffle for gl(" + std::to_string(r.n) + "|" +
                          std::to_string(r.m) + ")");
    return s;
}

Shuffle parse_shuffle(const std::string& text, const Rank& r) {
    std::vector<int> seq;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) throw DomainError("empty shuffle symbol in '" + text + "'");
        bool primed = tok.back() == '\'';
        if (primed) tok.pop_back();
        int v = std::stoi(tok);
        seq.push_back(primed ? primed_sym(v, r) : v);
    }
    return make_shuffle(std::move(seq), r);
}

Shuffle identity_shuffle(const Rank& r) {
    std::vector<int> seq(r.n + r.m);
    for (int t = 0; t < r.n + r.m; ++t) seq[t] = t + 1;
    return Shuffle{seq};
}

Shuffle antidistinguished_shuffle(const Rank& r) {
    std::vector<int> seq;
    for (int j = 1; j <= r.m; ++j) seq.push_back(primed_sym(j, r));
    for (int i = 1; i <= r.n; ++i) seq.push_back(i);
    return Shuffle{seq};
}

std::vector<Shuffle> all_shuffles(const Rank& r) {
    // Choose the positions of the unprimed symbols; both families are then
    // forced to appear in increasing order.
    std::vector<Shuffle> out;
    const int len = r.n + r.m;
    std::vector<int> mask(len, 0);
    std::fill(mask.begin(), mask.begin() + r.n, 1);
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<int> seq(len);
        int next_plain = 1, next_primed = 1;
        for (int t = 0; t < len; ++t)
            seq[t] = mask[t] ? next_plain++ : primed_sym(next_primed++, r);
        out.push_back(Shuffle{seq});
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

Partition zeta(const Shuffle& s, const Rank& r) {
    std::vector<int> parts(r.n, 0);
    int rights = 0, downs = 0;
    for (int sym : s.seq) {
        if (sym_primed(sym, r)) {
            ++rights;
        } else {
            ++downs;
            parts[r.n - downs] = rights;  // row eps_downs holds lambda_{n+1-downs}
        }
    }
    return Partition{parts};
}

Shuffle zeta_inv(const Partition& p, const Rank& r) {
    std::vector<int> seq(r.n + r.m, 0);
    // The i-th Down step (row eps_i) comes after lambda_{n+1-i} Right steps.
    for (int i = 1; i <= r.n; ++i) seq[p.row(i) + i - 1] = i;
    int next_primed = 1;
    for (int& sym : seq)
        if (sym == 0) sym = primed_sym(next_primed++, r);
    return Shuffle{seq};
}

namespace {
int position_of(const Shuffle& s, int sym) {
    for (size_t t = 0; t < s.seq.size(); ++t)
        if (s.seq[t] == sym) return static_cast<int>(t);
    return -1;
}
}  // namespace

bool reflection_defined(const Shuffle& s, const OddRoot& alpha, const Rank& r) {
    const int pi = position_of(s, alpha.i);
    const int pj = position_of(s, primed_sym(alpha.j, r));
    return alpha.sign > 0 ? pj == pi + 1 : pi == pj + 1;
}

Shuffle odd_reflect_shuffle(const Shuffle& s, const OddRoot& alpha, const Rank& r) {
    if (!reflection_defined(s, alpha, r))
        throw NotSimple(root_str(alpha) + " is not simple for " + shuffle_str(s, r));
    Shuffle out = s;
    const int pi = position_of(s, alpha.i);
    const int pj = position_of(s, primed_sym(alpha.j, r));
    std::swap(out.seq[pi], out.seq[pj]);
    return out;
}

bool bar_shuffle_defined(const Shuffle& s, const Rank& r) { return s.seq.back() == r.n; }

Shuffle bar_shuffle(const Shuffle& s, const Rank& r) {
    if (!bar_shuffle_defined(s, r))
        throw DomainError("bar needs the last symbol to be n, got " + shuffle_str(s, r));
    // Prepend 1 and shift every unprimed symbol up by one mod n.
    std::vector<int> seq;
    seq.reserve(s.seq.size());
    seq.push_back(1);
    for (size_t t = 0; t + 1 < s.seq.size(); ++t) {
        int sym = s.seq[t];
        seq.push_back(sym_primed(sym, r) ? sym : sym % r.n + 1);
    }
    return Shuffle{seq};
}

bool underbar_shuffle_defined(const Shuffle& s, const Rank&) { return s.seq.front() == 1; }

Shuffle underbar_shuffle(const Shuffle& s, const Rank& r) {
    if (!underbar_shuffle_defined(s, r))
        throw DomainError("underbar needs the first symbol to be 1, got " + shuffle_str(s, r));
    std::vector<int> seq;
    seq.reserve(s.seq.size());
    for (size_t t = 1; t < s.seq.size(); ++t) {
        int sym = s.seq[t];
        seq.push_back(sym_primed(sym, r) ? sym : (sym + r.n - 2) % r.n + 1);
    }
    seq.push_back(r.n);
    return Shuffle{seq};
}

std::string delta_epsilon_render(const Shuffle& s, const Rank& r) {
    const Partition lam = zeta(s, r);
    std::ostringstream os;
    os << "path:";
    for (int sym : s.seq) os << ' ' << (sym_primed(sym, r) ? 'R' : 'D');
    os << '\n';
    for (int i = 1; i <= r.n; ++i) {
        const int inside = lam.row(i);  // boxes of row eps_i below the path
        for (int j = 1; j <= r.m; ++j) {
            OddRoot a{j <= inside ? -1 : +1, i, j};
            if (j == 1 && inside == 0) os << " │";
            os << ' ' << root_str(a);
            if (j == inside) os << " │";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace wg
