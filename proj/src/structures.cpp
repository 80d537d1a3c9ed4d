#include "multikit/structures.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace multikit {

namespace {

struct TableBuilder {
    std::string name;
    std::vector<std::string> element_names;
    ElementId zero = 0, one = 0;
    std::vector<ElementId> neg;
    std::vector<ElemSet> sum, prod;

    explicit TableBuilder(std::string nm, std::vector<std::string> names)
        : name(std::move(nm)), element_names(std::move(names)) {
        const auto n = static_cast<std::uint32_t>(element_names.size());
        neg.resize(n);
        for (ElementId e = 0; e < n; ++e) neg[e] = e;
        sum.assign(std::size_t{n} * n, ElemSet(n));
        prod.assign(std::size_t{n} * n, ElemSet(n));
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(element_names.size()); }

    void set_sum(ElementId a, ElementId b, const ElemSet& v) {
        sum[a * size() + b] = v;
        sum[b * size() + a] = v;
    }
    void set_prod(ElementId a, ElementId b, const ElemSet& v) {
        prod[a * size() + b] = v;
        prod[b * size() + a] = v;
    }
    void set_prod1(ElementId a, ElementId b, ElementId v) {
        set_prod(a, b, ElemSet::singleton(size(), v));
    }

    SuperringPtr build() {
        return FiniteSuperring::create(std::move(name), std::move(element_names), zero, one,
                                       std::move(neg), std::move(sum), std::move(prod));
    }
};

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

SuperringPtr make_krasner() {
    TableBuilder t("krasner", {"0", "1"});
    t.zero = 0;
    t.one = 1;
    t.set_sum(0, 0, ElemSet::singleton(2, 0));
    t.set_sum(0, 1, ElemSet::singleton(2, 1));
    ElemSet both(2);
    both.insert(0);
    both.insert(1);
    t.set_sum(1, 1, both);
    t.set_prod1(0, 0, 0);
    t.set_prod1(0, 1, 0);
    t.set_prod1(1, 1, 1);
    return t.build();
}

SuperringPtr make_q2() {
    // indices: 0 -> 0, 1 -> 1, 2 -> -1
    TableBuilder t("q2", {"0", "1", "-1"});
    t.zero = 0;
    t.one = 1;
    t.neg = {0, 2, 1};
    auto single = [](ElementId e) { return ElemSet::singleton(3, e); };
    t.set_sum(0, 0, single(0));
    t.set_sum(0, 1, single(1));
    t.set_sum(0, 2, single(2));
    t.set_sum(1, 1, single(1));
    t.set_sum(2, 2, single(2));
    t.set_sum(1, 2, ElemSet::full(3));
    t.set_prod1(0, 0, 0);
    t.set_prod1(0, 1, 0);
    t.set_prod1(0, 2, 0);
    t.set_prod1(1, 1, 1);
    t.set_prod1(1, 2, 2);
    t.set_prod1(2, 2, 1);
    return t.build();
}

SuperringPtr make_hp(unsigned p) {
    if (!is_prime(p)) throw DomainError("make_hp: " + std::to_string(p) + " is not prime");
    std::vector<std::string> names;
    for (unsigned i = 0; i < p; ++i) names.push_back(std::to_string(i));
    TableBuilder t("h" + std::to_string(p), std::move(names));
    t.zero = 0;
    t.one = p >= 2 ? 1 : 0;
    for (ElementId a = 0; a < p; ++a)
        for (ElementId b = a; b < p; ++b) {
            ElemSet s(p);
            if (a == 0) {
                s.insert(b);
            } else if (b == 0) {
                s.insert(a);
            } else if (a == b) {
                s = ElemSet::full(p);
            } else {
                s.insert(a);
                s.insert(b);
            }
            t.set_sum(a, b, s);
            t.set_prod1(a, b, static_cast<ElementId>((a * b) % p));
        }
    return t.build();
}

SuperringPtr make_kaleidoscope(unsigned n) {
    // index 0 -> 0, index 2k-1 -> +k, index 2k -> -k
    const std::uint32_t size = 2 * n + 1;
    std::vector<std::string> names{"0"};
    for (unsigned k = 1; k <= n; ++k) {
        names.push_back(std::to_string(k));
        names.push_back("-" + std::to_string(k));
    }
    TableBuilder t("x" + std::to_string(n), std::move(names));
    t.zero = 0;
    t.one = n >= 1 ? 1 : 0;
    for (unsigned k = 1; k <= n; ++k) {
        t.neg[2 * k - 1] = 2 * k;
        t.neg[2 * k] = 2 * k - 1;
    }

    auto value = [](ElementId e) -> int {
        if (e == 0) return 0;
        const int k = static_cast<int>((e + 1) / 2);
        return (e % 2 == 1) ? k : -k;
    };
    auto id_of = [](int v) -> ElementId {
        if (v == 0) return 0;
        return v > 0 ? static_cast<ElementId>(2 * v - 1) : static_cast<ElementId>(-2 * v);
    };

    for (ElementId ea = 0; ea < size; ++ea)
        for (ElementId eb = ea; eb < size; ++eb) {
            const int a = value(ea), b = value(eb);
            ElemSet s(size);
            if (b == -a) {
                for (int v = -std::abs(a); v <= std::abs(a); ++v) s.insert(id_of(v));
            } else {
                s.insert(std::abs(b) <= std::abs(a) ? ea : eb);
            }
            t.set_sum(ea, eb, s);

            int pv = 0;
            if (a != 0 && b != 0) {
                const int mag = std::max(std::abs(a), std::abs(b));
                pv = (a > 0) == (b > 0) ? mag : -mag;
            }
            t.set_prod1(ea, eb, id_of(pv));
        }
    return t.build();
}

namespace {

unsigned gf2k_mul(unsigned a, unsigned b, unsigned mod, unsigned deg) {
    unsigned r = 0;
    for (unsigned i = 0; (b >> i) != 0; ++i)
        if ((b >> i) & 1) r ^= a << i;
    for (int i = static_cast<int>(2 * deg); i >= static_cast<int>(deg); --i)
        if ((r >> i) & 1) r ^= mod << (i - deg);
    return r;
}

} // namespace

SuperringPtr make_strict(unsigned q) {
    const bool supported = q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
    if (!supported)
        throw DomainError("make_strict: unsupported field order " + std::to_string(q));

    std::vector<std::string> names;
    for (unsigned i = 0; i < q; ++i) names.push_back(std::to_string(i));
    TableBuilder t("f" + std::to_string(q), std::move(names));
    t.zero = 0;
    t.one = 1;

    auto add = [&](unsigned a, unsigned b) -> unsigned {
        if (q == 4 || q == 8) return a ^ b;
        if (q == 9) return (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3);
        return (a + b) % q;
    };
    auto mul = [&](unsigned a, unsigned b) -> unsigned {
        if (q == 4) return gf2k_mul(a, b, 0b111u, 2);
        if (q == 8) return gf2k_mul(a, b, 0b1011u, 3);
        if (q == 9) {
            // pairs (lo, hi) = lo + hi*x with x*x = 2
            const unsigned a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
            const unsigned c0 = (a0 * b0 + 2 * a1 * b1) % 3;
            const unsigned c1 = (a0 * b1 + a1 * b0) % 3;
            return c0 + 3 * c1;
        }
        return (a * b) % q;
    };
    auto negate = [&](unsigned a) -> unsigned {
        if (q == 4 || q == 8) return a;
        if (q == 9) return (3 - a % 3) % 3 + 3 * ((3 - a / 3) % 3);
        return (q - a) % q;
    };

    for (ElementId a = 0; a < q; ++a) {
        t.neg[a] = negate(a);
        for (ElementId b = a; b < q; ++b) {
            t.set_sum(a, b, ElemSet::singleton(q, add(a, b)));
            t.set_prod1(a, b, mul(a, b));
        }
    }
    return t.build();
}

SuperringPtr product_h(const SuperringPtr& fp, const SuperringPtr& gp) {
    const FiniteSuperring& f = *fp;
    const FiniteSuperring& g = *gp;
    if (!f.report().superfield || !g.report().superfield)
        throw DomainError("product_h: both factors must be superfields");

    // carrier: 0, then nonzero pairs (x,y) ordered by (x,y) index
    struct Pair { ElementId x, y; };
    std::vector<Pair> pairs;
    for (ElementId x = 0; x < f.size(); ++x) {
        if (x == f.zero()) continue;
        for (ElementId y = 0; y < g.size(); ++y) {
            if (y == g.zero()) continue;
            pairs.push_back({x, y});
        }
    }
    const auto n = static_cast<std::uint32_t>(pairs.size() + 1);
    auto pair_id = [&](ElementId x, ElementId y) -> ElementId {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].x == x && pairs[i].y == y) return static_cast<ElementId>(i + 1);
        throw DomainError("product_h: internal pair lookup");
    };

    std::vector<std::string> names{"0"};
    for (const Pair& p : pairs)
        names.push_back("(" + f.element_name(p.x) + "_" + g.element_name(p.y) + ")");

    TableBuilder t(f.name() + "x" + g.name(), std::move(names));
    t.zero = 0;
    t.one = pair_id(f.one(), g.one());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        t.neg[i + 1] = pair_id(f.neg(pairs[i].x), g.neg(pairs[i].y));
    t.neg[0] = 0;

    for (ElementId a = 0; a < n; ++a) {
        t.set_sum(0, a, ElemSet::singleton(n, a));
        t.set_prod1(0, a, 0);
    }
    for (ElementId a = 1; a < n; ++a)
        for (ElementId b = a; b < n; ++b) {
            const Pair& pa = pairs[a - 1];
            const Pair& pb = pairs[b - 1];

            const ElemSet& sx = f.sum(pa.x, pb.x);
            const ElemSet& sy = g.sum(pa.y, pb.y);
            ElemSet s(n);
            sx.for_each([&](ElementId zx) {
                if (zx == f.zero()) return;
                sy.for_each([&](ElementId zy) {
                    if (zy == g.zero()) return;
                    s.insert(pair_id(zx, zy));
                });
            });
            if (sx.contains(f.zero()) && sy.contains(g.zero())) s.insert(0);
            t.set_sum(a, b, s);

            const ElemSet& px = f.prod(pa.x, pb.x);
            const ElemSet& py = g.prod(pa.y, pb.y);
            ElemSet p(n);
            px.for_each([&](ElementId zx) {
                if (zx == f.zero()) return;
                py.for_each([&](ElementId zy) {
                    if (zy == g.zero()) return;
                    p.insert(pair_id(zx, zy));
                });
            });
            if (px.contains(f.zero()) || py.contains(g.zero())) p.insert(0);
            t.set_prod(a, b, p);
        }

    SuperringPtr out = t.build();
    if (!out->report().superfield)
        throw DomainError("product_h: result fails the superfield checks");
    return out;
}

SuperringPtr builtin_structure(const std::string& name) {
    auto num_suffix = [&](char prefix) -> std::optional<unsigned> {
        if (name.size() < 2 || name[0] != prefix) return std::nullopt;
        unsigned v = 0;
        auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
        if (ec != std::errc() || p != name.data() + name.size()) return std::nullopt;
        return v;
    };

    if (name == "krasner") return make_krasner();
    if (name == "q2") return make_q2();
    if (name == "l9") {
        SuperringPtr l = product_h(make_hp(3), make_hp(5));
        return rename_structure(*l, "l9", {"0", "1", "w", "2w", "2", "a", "b", "c", "d"});
    }
    if (auto p = num_suffix('h')) return make_hp(*p);
    if (auto n = num_suffix('x')) return make_kaleidoscope(*n);
    if (auto q = num_suffix('f')) return make_strict(*q);
    return nullptr;
}

// ---------------------------------------------------------------------------
// text format

namespace {

bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
                        c == ')' || c == '+' || c == '-' || c == '[' || c == ']' || c == '^';
        if (!ok) return false;
    }
    return true;
}

struct Token {
    std::string text;
    int line;
    int col;
};

struct ParserState {
    std::string name;
    bool name_seen = false;
    std::vector<std::string> elements;
    bool elements_seen = false;
    std::map<std::string, ElementId> index;
    std::optional<ElementId> zero, one;
    std::vector<std::optional<ElementId>> neg;
    bool neg_identity = false;
    std::map<std::pair<ElementId, ElementId>, ElemSet> sums, prods;
};

[[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw ParseError(msg, at.line, at.col);
}

ElementId lookup(ParserState& st, const Token& tok) {
    auto it = st.index.find(tok.text);
    if (it == st.index.end()) fail(tok, "undeclared element '" + tok.text + "'");
    return it->second;
}

} // namespace

SuperringPtr parse_structure(std::string_view text) {
    ParserState st;

    std::vector<std::vector<Token>> lines;
    {
        int line_no = 1;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            std::vector<Token> toks;
            std::size_t i = 0;
            while (i < line.size()) {
                if (std::isspace(static_cast<unsigned char>(line[i]))) {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
                toks.push_back({std::string(line.substr(i, j - i)), line_no, static_cast<int>(i + 1)});
                i = j;
            }
            if (!toks.empty()) lines.push_back(std::move(toks));
            if (eol == text.size()) break;
            pos = eol + 1;
            ++line_no;
        }
    }

    for (const auto& toks : lines) {
        const Token& head = toks[0];
        const std::string& kw = head.text;

        auto need_elements = [&] {
            if (!st.elements_seen) fail(head, "'" + kw + "' before 'elements'");
        };

        if (kw == "name") {
            if (toks.size() != 2) fail(head, "expected: name <ident>");
            if (st.name_seen) fail(head, "duplicate 'name' line");
            st.name = toks[1].text;
            st.name_seen = true;
        } else if (kw == "elements") {
            if (st.elements_seen) fail(head, "duplicate 'elements' line");
            if (toks.size() < 2) fail(head, "empty element list");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const Token& tk = toks[i];
                if (!valid_ident(tk.text) || tk.text == "identity")
                    fail(tk, "invalid element identifier '" + tk.text + "'");
                if (st.index.count(tk.text)) fail(tk, "duplicate element '" + tk.text + "'");
                st.index[tk.text] = static_cast<ElementId>(st.elements.size());
                st.elements.push_back(tk.text);
            }
            st.elements_seen = true;
            st.neg.assign(st.elements.size(), std::nullopt);
        } else if (kw == "zero" || kw == "one") {
            need_elements();
            if (toks.size() != 2) fail(head, "expected: " + kw + " <element>");
            auto& slot = (kw == "zero") ? st.zero : st.one;
            if (slot) fail(head, "duplicate '" + kw + "' line");
            slot = lookup(st, toks[1]);
        } else if (kw == "neg") {
            need_elements();
            if (toks.size() == 2 && toks[1].text == "identity") {
                if (st.neg_identity) fail(head, "duplicate 'neg identity' line");
                st.neg_identity = true;
                for (ElementId e = 0; e < st.elements.size(); ++e) st.neg[e] = e;
                continue;
            }
            if (toks.size() != 3) fail(head, "expected: neg <a> <b> or neg identity");
            ElementId a = lookup(st, toks[1]);
            ElementId b = lookup(st, toks[2]);
            if ((st.neg[a] && *st.neg[a] != b) || (st.neg[b] && *st.neg[b] != a))
                fail(head, "conflicting neg entry for '" + toks[1].text + "'");
            st.neg[a] = b;
            st.neg[b] = a;
        } else if (kw == "sum" || kw == "prod") {
            need_elements();
            if (toks.size() < 5 || toks[3].text != ":")
                fail(head, "expected: " + kw + " <a> <b> : <e1> ...");
            ElementId a = lookup(st, toks[1]);
            ElementId b = lookup(st, toks[2]);
            ElemSet v(static_cast<std::uint32_t>(st.elements.size()));
            for (std::size_t i = 4; i < toks.size(); ++i) v.insert(lookup(st, toks[i]));
            auto key = std::minmax(a, b);
            auto& table = (kw == "sum") ? st.sums : st.prods;
            if (table.count({key.first, key.second}))
                fail(head, "duplicate " + kw + " entry for pair (" + toks[1].text + "," +
                               toks[2].text + ")");
            table.emplace(std::make_pair(key.first, key.second), std::move(v));
        } else {
            fail(head, "unknown directive '" + kw + "'");
        }
    }

    const Token eof{"", static_cast<int>(lines.size()) + 1, 1};
    if (!st.name_seen) fail(eof, "missing 'name' line");
    if (!st.elements_seen) fail(eof, "missing 'elements' line");
    if (!st.zero) fail(eof, "missing 'zero' line");
    if (!st.one) fail(eof, "missing 'one' line");

    const auto n = static_cast<std::uint32_t>(st.elements.size());
    std::vector<ElementId> neg(n);
    for (ElementId e = 0; e < n; ++e) {
        if (!st.neg[e]) fail(eof, "missing neg entry for '" + st.elements[e] + "'");
        neg[e] = *st.neg[e];
    }

    std::vector<ElemSet> sum(std::size_t{n} * n, ElemSet(n)), prod(std::size_t{n} * n, ElemSet(n));
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = a; b < n; ++b) {
            auto si = st.sums.find({a, b});
            if (si == st.sums.end())
                fail(eof, "missing sum entry for pair (" + st.elements[a] + "," + st.elements[b] +
                              ")");
            auto pi = st.prods.find({a, b});
            if (pi == st.prods.end())
                fail(eof, "missing prod entry for pair (" + st.elements[a] + "," +
                              st.elements[b] + ")");
            sum[a * n + b] = sum[b * n + a] = si->second;
            prod[a * n + b] = prod[b * n + a] = pi->second;
        }

    try {
        return FiniteSuperring::create(st.name, st.elements, *st.zero, *st.one, std::move(neg),
                                       std::move(sum), std::move(prod));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), eof.line, 1);
    }
}

std::string serialize_structure(const FiniteSuperring& s) {
    std::ostringstream out;
    out << "name " << s.name() << "\n";
    out << "elements";
    for (ElementId e = 0; e < s.size(); ++e) out << ' ' << s.element_name(e);
    out << "\n";
    out << "zero " << s.element_name(s.zero()) << "\n";
    out << "one " << s.element_name(s.one()) << "\n";

    bool identity = true;
    for (ElementId e = 0; e < s.size(); ++e)
        if (s.neg(e) != e) identity = false;
    if (identity) {
        out << "neg identity\n";
    } else {
        for (ElementId e = 0; e < s.size(); ++e)
            out << "neg " << s.element_name(e) << ' ' << s.element_name(s.neg(e)) << "\n";
    }

    for (const char* kw : {"sum", "prod"})
        for (ElementId a = 0; a < s.size(); ++a)
            for (ElementId b = a; b < s.size(); ++b) {
                const ElemSet& v =
                    (kw[0] == 's') ? s.sum(a, b) : s.prod(a, b);
                out << kw << ' ' << s.element_name(a) << ' ' << s.element_name(b) << " :";
                v.for_each([&](ElementId e) { out << ' ' << s.element_name(e); });
                out << "\n";
            }
    return out.str();
}

} // namespace multikit
