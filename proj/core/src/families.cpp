#include "glncomb/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace glncomb {

namespace {

void check_ground_set(int n) {
    if (n < 1 || n > 31) {
        throw std::invalid_argument("ground set size must be in 1..31");
    }
}

uint32_t mask_of(const Permutation& w, int count) {
    uint32_t bits = 0;
    for (int i = 1; i <= count; ++i) bits |= 1u << (w(i) - 1);
    return bits;
}

}  // namespace

Subset::Subset(int n, uint32_t bits) : n_(n), bits_(bits) {
    check_ground_set(n);
    if (n < 31 && (bits >> n) != 0) {
        throw std::invalid_argument("subset has elements beyond the ground set");
    }
}

Subset::Subset(int n, const std::vector<int>& elements) : n_(n), bits_(0) {
    check_ground_set(n);
    for (int k : elements) {
        if (k < 1 || k > n) {
            throw std::invalid_argument("element " + std::to_string(k) +
                                        " outside 1.." + std::to_string(n));
        }
        bits_ |= 1u << (k - 1);
    }
}

int Subset::size() const { return std::popcount(bits_); }

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (int k = 1; k <= n_; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

Subset prefix_set(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("prefix length out of range");
    return Subset(n, k == 0 ? 0u : ((1u << k) - 1u));
}

std::optional<int> as_prefix_set(const Subset& c) {
    int k = c.size();
    if (k >= 1 && c.bits() == ((1u << k) - 1u)) return k;
    return std::nullopt;
}

Subset act(const Permutation& w, const Subset& c) {
    if (w.size() != c.n()) throw std::invalid_argument("size mismatch in act");
    uint32_t bits = 0;
    for (int k = 1; k <= c.n(); ++k)
        if (c.contains(k)) bits |= 1u << (w(k) - 1);
    return Subset(c.n(), bits);
}

bool lex_less(const Subset& a, const Subset& b) {
    std::vector<int> ea = a.elements();
    std::vector<int> eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool equal_as_sets(const SubsetFamily& a, const SubsetFamily& b) {
    if (a.n != b.n || a.members.size() != b.members.size()) return false;
    std::vector<uint32_t> ma, mb;
    for (auto& c : a.members) ma.push_back(c.bits());
    for (auto& c : b.members) mb.push_back(c.bits());
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    return ma == mb;
}

namespace {

SubsetFamily dedup_append(int n, const std::vector<Subset>& in, int* dropped) {
    SubsetFamily out;
    out.n = n;
    int count = 0;
    for (const Subset& c : in) {
        bool seen = false;
        for (const Subset& m : out.members)
            if (m == c) { seen = true; break; }
        if (seen) ++count;
        else out.members.push_back(c);
    }
    if (dropped) *dropped = count;
    return out;
}

}  // namespace

SubsetFamily chamber_family(const Word& word, int* duplicates_dropped) {
    if (!is_reduced(word)) {
        throw std::invalid_argument("chamber families are defined for reduced words only");
    }
    std::vector<Subset> sets;
    Permutation prefix(word.n);
    for (int i : word.letters) {
        prefix = right_mul(prefix, i);
        sets.emplace_back(word.n, mask_of(prefix, i));
    }
    return dedup_append(word.n, sets, duplicates_dropped);
}

SubsetFamily full_chamber_family(const Word& word, int* duplicates_dropped) {
    SubsetFamily chambers = chamber_family(word, duplicates_dropped);
    SubsetFamily out;
    out.n = word.n;
    for (int k = 1; k <= word.n; ++k) out.members.push_back(prefix_set(word.n, k));
    for (const Subset& c : chambers.members) out.members.push_back(c);
    return out;
}

SubsetFamily family_of_list(const std::vector<Permutation>& ws, const std::vector<int>& js) {
    if (ws.empty() || ws.size() != js.size()) {
        throw std::invalid_argument("family_of_list needs matching nonempty sequences");
    }
    const int n = ws.front().size();
    std::vector<Subset> sets;
    for (size_t k = 0; k < ws.size(); ++k) {
        if (ws[k].size() != n) throw std::invalid_argument("size mismatch in sequence");
        if (js[k] < 1 || js[k] > n) throw std::invalid_argument("index out of range");
        sets.emplace_back(n, mask_of(ws[k], js[k]));
    }
    return dedup_append(n, sets, nullptr);
}

bool is_pair_strongly_separated(const Subset& a, const Subset& b) {
    uint32_t onlyA = a.bits() & ~b.bits();
    uint32_t onlyB = b.bits() & ~a.bits();
    if (onlyA == 0 || onlyB == 0) return true;
    int maxA = 32 - std::countl_zero(onlyA);
    int minB = std::countr_zero(onlyB) + 1;
    if (maxA < minB) return true;
    int maxB = 32 - std::countl_zero(onlyB);
    int minA = std::countr_zero(onlyA) + 1;
    return maxB < minA;
}

std::optional<std::pair<Subset, Subset>> strong_separation_violation(const SubsetFamily& d) {
    for (size_t i = 0; i < d.members.size(); ++i)
        for (size_t j = i + 1; j < d.members.size(); ++j)
            if (!is_pair_strongly_separated(d.members[i], d.members[j]))
                return std::make_pair(d.members[i], d.members[j]);
    return std::nullopt;
}

bool is_strongly_separated(const SubsetFamily& d) {
    return !strong_separation_violation(d).has_value();
}

bool is_percent_avoiding(const SubsetFamily& d) {
    std::vector<Subset> sorted = d.members;
    std::sort(sorted.begin(), sorted.end(),
              [](const Subset& a, const Subset& b) { return lex_less(a, b); });
    for (size_t j1 = 0; j1 < sorted.size(); ++j1) {
        for (size_t j2 = j1 + 1; j2 < sorted.size(); ++j2) {
            const Subset& A = sorted[j1];
            const Subset& B = sorted[j2];
            for (int i1 = 1; i1 <= d.n; ++i1) {
                if (!A.contains(i1)) continue;
                for (int i2 = 1; i2 < i1; ++i2) {
                    if (!B.contains(i2)) continue;
                    if (!B.contains(i1) && !A.contains(i2)) return false;
                }
            }
        }
    }
    return true;
}

namespace {

// A can precede B iff every element of B smaller than max(A) already lies in A.
bool northwest_pair(const Subset& a, const Subset& b) {
    if (a.empty()) return true;
    int maxA = 32 - std::countl_zero(a.bits());
    uint32_t below = (1u << (maxA - 1)) - 1u;
    return (b.bits() & below & ~a.bits()) == 0;
}

bool northwest_rec(const std::vector<Subset>& members,
                   const std::vector<std::vector<bool>>& ok,
                   uint32_t remaining, std::vector<int8_t>& memo) {
    if (remaining == 0) return true;
    int8_t& slot = memo[remaining];
    if (slot != -1) return slot != 0;
    bool found = false;
    for (size_t x = 0; x < members.size() && !found; ++x) {
        if (!((remaining >> x) & 1u)) continue;
        bool fits = true;
        for (size_t y = 0; y < members.size(); ++y) {
            if (y == x || !((remaining >> y) & 1u)) continue;
            if (!ok[x][y]) { fits = false; break; }
        }
        if (fits && northwest_rec(members, ok, remaining & ~(1u << x), memo)) found = true;
    }
    slot = found ? 1 : 0;
    return found;
}

}  // namespace

bool is_northwest(const SubsetFamily& d) {
    if (d.members.size() > 12) {
        throw std::invalid_argument("northwest search is guarded to 12 members");
    }
    const size_t m = d.members.size();
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
    for (size_t x = 0; x < m; ++x)
        for (size_t y = 0; y < m; ++y)
            if (x != y) ok[x][y] = northwest_pair(d.members[x], d.members[y]);
    std::vector<int8_t> memo(1u << m, -1);
    return northwest_rec(d.members, ok, (1u << m) - 1u, memo);
}

namespace {

// Fewest letters a permutation with v[m] = S can have: sum over the sorted
// elements s_t of (s_t - t).
int staircase_defect(const Subset& s) {
    int total = 0;
    int t = 1;
    for (int e : s.elements()) total += e - t++;
    return total;
}

struct EmbedSearch {
    int n;
    int limit;
    std::vector<uint32_t> targets;  // masks still unmatched are tracked via bitset

    std::optional<std::vector<int>> dfs(Permutation& p, std::vector<int>& prefix,
                                        uint32_t unmatched) {
        if (unmatched == 0) return prefix;
        int depth = static_cast<int>(prefix.size());
        Permutation pinv = inverse(p);
        int bound = 0;
        for (size_t t = 0; t < targets.size(); ++t) {
            if (!((unmatched >> t) & 1u)) continue;
            bound = std::max(bound, staircase_defect(act(pinv, Subset(n, targets[t]))));
        }
        if (depth + bound > limit) return std::nullopt;
        for (int i = 1; i < n; ++i) {
            if (p(i) >= p(i + 1)) continue;  // extension must stay reduced
            Permutation q = right_mul(p, i);
            uint32_t chamber = mask_of(q, i);
            uint32_t next = unmatched;
            for (size_t t = 0; t < targets.size(); ++t)
                if (targets[t] == chamber) next &= ~(1u << t);
            prefix.push_back(i);
            auto found = dfs(q, prefix, next);
            if (found) return found;
            prefix.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

Word find_embedding_word(const SubsetFamily& d) {
    const int n = d.n;
    if (n > 7) throw std::invalid_argument("embedding-word search is guarded to n <= 7");
    if (auto v = strong_separation_violation(d)) {
        throw std::invalid_argument("family is not strongly separated: (" +
                                    to_string(v->first) + ", " + to_string(v->second) + ")");
    }
    EmbedSearch search;
    search.n = n;
    for (const Subset& c : d.members) {
        if (c.empty()) {
            throw std::invalid_argument("the empty subset cannot lie in a chamber family");
        }
        if (!as_prefix_set(c)) search.targets.push_back(c.bits());
    }
    if (search.targets.empty()) return Word{n, {}};
    if (search.targets.size() > 31) throw std::invalid_argument("too many members");

    int start = 0;
    for (uint32_t t : search.targets)
        start = std::max(start, staircase_defect(Subset(n, t)));
    const int max_len = n * (n - 1) / 2;
    for (int limit = start; limit <= max_len; ++limit) {
        search.limit = limit;
        Permutation p(n);
        std::vector<int> prefix;
        uint32_t all = (search.targets.size() == 31) ? 0x7fffffffu
                                                     : ((1u << search.targets.size()) - 1u);
        auto found = search.dfs(p, prefix, all);
        if (found) return Word{n, *found};
    }
    // Strong separation guarantees an embedding inside some full-length word.
    throw std::logic_error("embedding search failed for a strongly separated family");
}

bool is_i_free(const SubsetFamily& d, int i) {
    if (i < 1 || i >= d.n) throw std::invalid_argument("index out of range in is_i_free");
    for (const Subset& c : d.members) {
        if (!c.contains(i) && c.contains(i + 1)) return false;
    }
    return true;
}

SubsetFamily lambda_family(int i, const SubsetFamily& d) {
    if (i < 1 || i >= d.n) throw std::invalid_argument("index out of range in lambda_family");
    Permutation si = simple_transposition(d.n, i);
    std::vector<Subset> sets;
    sets.push_back(act(si, prefix_set(d.n, i)));
    for (const Subset& c : d.members) sets.push_back(act(si, c));
    return dedup_append(d.n, sets, nullptr);
}

SubsetFamily act(const Permutation& w, const SubsetFamily& d) {
    if (w.size() != d.n) throw std::invalid_argument("size mismatch in act");
    SubsetFamily out;
    out.n = d.n;
    for (const Subset& c : d.members) out.members.push_back(act(w, c));
    return out;
}

MultFamily inversion_family(const Permutation& w) {
    const int n = w.size();
    MultFamily out;
    out.n = n;
    for (int j = 1; j <= n; ++j) {
        uint32_t bits = 0;
        for (int i = 1; i < j; ++i)
            if (w(i) > w(j)) bits |= 1u << (i - 1);
        if (bits == 0) continue;
        Subset c(n, bits);
        bool merged = false;
        for (size_t k = 0; k < out.members.size(); ++k) {
            if (out.members[k] == c) {
                ++out.mult[k];
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.members.push_back(c);
            out.mult.push_back(1);
        }
    }
    return out;
}

namespace {

std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

std::string render_young(const MultFamily& d, const RenderOptions& opts) {
    if (d.members.size() != d.mult.size()) {
        throw std::invalid_argument("multiplicity list does not match members");
    }
    std::vector<const Subset*> columns;
    for (size_t k = 0; k < d.members.size(); ++k) {
        if (d.mult[k] < 0) throw std::invalid_argument("negative multiplicity");
        for (int c = 0; c < d.mult[k]; ++c) columns.push_back(&d.members[k]);
    }
    if (columns.empty()) return "";
    const std::string box = opts.ascii ? "[]" : "□";
    const std::string gap = opts.ascii ? "  " : " ";
    std::ostringstream os;
    for (int r = 1; r <= d.n; ++r) {
        std::string line = std::to_string(r);
        for (const Subset* c : columns) {
            line += ' ';
            line += c->contains(r) ? box : gap;
        }
        os << rstrip(line) << '\n';
    }
    return os.str();
}

std::string render_wiring(const Word& word, const RenderOptions& opts) {
    SubsetFamily labels = full_chamber_family(word);  // also validates reducedness
    const int n = word.n;
    const std::string wire = opts.ascii ? "-" : "─";
    Permutation v = word_to_perm(word);
    std::ostringstream os;
    for (int r = 1; r <= n; ++r) {
        os << r << ' ';
        for (int i : word.letters) {
            os << wire << (r == i || r == i + 1 ? "X" : wire) << wire;
        }
        os << ' ' << v(r) << '\n';
    }
    os << "chambers: " << to_string(labels) << '\n';
    return os.str();
}

std::string to_string(const Subset& c) {
    if (c.empty()) return "{}";
    std::ostringstream os;
    if (c.n() <= 9) {
        for (int e : c.elements()) os << e;
    } else {
        os << '{';
        bool first = true;
        for (int e : c.elements()) {
            if (!first) os << ',';
            os << e;
            first = false;
        }
        os << '}';
    }
    return os.str();
}

std::string to_string(const SubsetFamily& d) {
    std::ostringstream os;
    for (size_t k = 0; k < d.members.size(); ++k) {
        if (k > 0) os << ", ";
        os << to_string(d.members[k]);
    }
    return os.str();
}

std::string to_string(const MultFamily& d) {
    std::ostringstream os;
    for (size_t k = 0; k < d.members.size(); ++k) {
        if (k > 0) os << ", ";
        os << to_string(d.members[k]) << ':' << d.mult[k];
    }
    return os.str();
}

namespace {

std::vector<int> parse_subset_elements(const std::string& token) {
    std::string t = token;
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            t.end());
    if (t.empty()) throw std::invalid_argument("empty subset token");
    std::vector<int> elems;
    if (t.front() == '{') {
        if (t.back() != '}') throw std::invalid_argument("unbalanced braces in '" + token + "'");
        std::string inner = t.substr(1, t.size() - 2);
        if (!inner.empty()) {
            std::istringstream is(inner);
            std::string item;
            while (std::getline(is, item, ',')) {
                if (item.empty()) throw std::invalid_argument("empty element in '" + token + "'");
                elems.push_back(std::stoi(item));
            }
        }
    } else {
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
                throw std::invalid_argument("cannot parse subset '" + token + "'");
            }
            elems.push_back(c - '0');
        }
    }
    return elems;
}

// Splits on commas that are not inside braces.
std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int infer_ground_set(const std::vector<std::vector<int>>& element_lists, int n) {
    if (n > 0) return n;
    int m = 1;
    for (const auto& elems : element_lists)
        for (int e : elems) m = std::max(m, e);
    return m;
}

}  // namespace

Subset parse_subset(const std::string& text, int n) {
    std::vector<int> elems = parse_subset_elements(text);
    return Subset(infer_ground_set({elems}, n), elems);
}

SubsetFamily parse_family(const std::string& text, int n) {
    std::vector<std::vector<int>> lists;
    for (const std::string& token : split_top_level(text))
        lists.push_back(parse_subset_elements(token));
    const int m = infer_ground_set(lists, n);
    SubsetFamily out;
    out.n = m;
    for (const auto& elems : lists) {
        Subset c(m, elems);
        for (const Subset& prev : out.members)
            if (prev == c) throw std::invalid_argument("duplicate member " + to_string(c));
        out.members.push_back(c);
    }
    return out;
}

MultFamily parse_mult_family(const std::string& text, int n) {
    std::vector<std::vector<int>> lists;
    std::vector<int> mults;
    for (const std::string& token : split_top_level(text)) {
        size_t colon = token.rfind(':');
        std::string part = token;
        int mult = 1;
        if (colon != std::string::npos) {
            part = token.substr(0, colon);
            std::string mt = token.substr(colon + 1);
            try {
                mult = std::stoi(mt);
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse multiplicity in '" + token + "'");
            }
            if (mult < 0) throw std::invalid_argument("negative multiplicity in '" + token + "'");
        }
        lists.push_back(parse_subset_elements(part));
        mults.push_back(mult);
    }
    const int m = infer_ground_set(lists, n);
    MultFamily out;
    out.n = m;
    for (size_t k = 0; k < lists.size(); ++k) {
        Subset c(m, lists[k]);
        for (const Subset& prev : out.members)
            if (prev == c) throw std::invalid_argument("duplicate member " + to_string(c));
        out.members.push_back(c);
        out.mult.push_back(mults[k]);
    }
    return out;
}

std::string family_to_json(const MultFamily& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["members"] = nlohmann::json::array();
    for (const Subset& c : d.members) j["members"].push_back(c.elements());
    j["mult"] = d.mult;
    return j.dump();
}

MultFamily family_from_json(const std::string& json_text) {
    MultFamily out;
    try {
        nlohmann::json j = nlohmann::json::parse(json_text);
        out.n = j.at("n").get<int>();
        for (const auto& m : j.at("members")) {
            out.members.emplace_back(out.n, m.get<std::vector<int>>());
        }
        if (j.contains("mult")) {
            out.mult = j.at("mult").get<std::vector<int>>();
        } else {
            out.mult.assign(out.members.size(), 1);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad family JSON: ") + e.what());
    }
    if (out.mult.size() != out.members.size()) {
        throw std::invalid_argument("mult and members differ in length");
    }
    for (int m : out.mult)
        if (m < 0) throw std::invalid_argument("negative multiplicity");
    return out;
}

}  // namespace glncomb
