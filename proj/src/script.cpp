// Line-oriented construction script reader. The grammar is described in README.md.

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "matchstick/construct.hpp"

namespace matchstick {

ScriptError::ScriptError(Kind kind, int line, const std::string& message)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}", line, message) : message),
      kind_(kind),
      line_(line) {}

namespace {

using Kind = ScriptError::Kind;

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
        out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    }
    return true;
}

class Parser {
public:
    Construction run(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            toks_ = tokenize(raw);
            pos_ = 0;
            if (toks_.empty()) continue;
            statement();
        }
        finish();
        return std::move(c_);
    }

private:
    [[noreturn]] void fail(Kind kind, const std::string& msg) const { throw ScriptError(kind, line_, msg); }

    bool at_end() const { return pos_ >= toks_.size(); }

    std::string next(std::string_view what) {
        if (at_end()) fail(Kind::Syntax, fmt::format("expected {}", what));
        return toks_[pos_++];
    }

    void expect(std::string_view keyword) {
        const std::string t = next(fmt::format("'{}'", keyword));
        if (t != keyword) fail(Kind::Syntax, fmt::format("expected '{}', found '{}'", keyword, t));
    }

    void expect_end() {
        if (!at_end()) fail(Kind::Syntax, fmt::format("unexpected token '{}'", toks_[pos_]));
    }

    double number(std::string_view what) {
        const std::string t = next(what);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
            fail(Kind::Syntax, fmt::format("expected {}, found '{}'", what, t));
        }
        return v;
    }

    std::optional<Turn> turn() {
        const std::string t = next("turn sign (+, - or ?)");
        if (t == "+") return Turn::Ccw;
        if (t == "-") return Turn::Cw;
        if (t == "?") return std::nullopt;
        fail(Kind::Syntax, fmt::format("expected turn sign, found '{}'", t));
    }

    std::string point_token() {
        const std::string t = next("point id");
        if (!is_identifier(t)) fail(Kind::Syntax, fmt::format("invalid point id '{}'", t));
        return t;
    }

    const std::string& known(const std::string& id) {
        if (!defined_.contains(id)) fail(Kind::UnknownPoint, fmt::format("unknown point '{}'", id));
        return id;
    }

    std::string existing_point() { return known(point_token()); }

    void define(const std::string& id) {
        if (defined_.contains(id)) fail(Kind::DuplicatePoint, fmt::format("point '{}' already defined", id));
        defined_.insert(id);
    }

    std::string fresh_point() {
        std::string id = point_token();
        if (defined_.contains(id)) fail(Kind::DuplicatePoint, fmt::format("point '{}' already defined", id));
        return id;
    }

    // "P1..P24" -> P1, P2, ..., P24; plain ids pass through.
    std::vector<std::string> expand(const std::string& tok) {
        const auto dots = tok.find("..");
        if (dots == std::string::npos) {
            if (!is_identifier(tok)) fail(Kind::Syntax, fmt::format("invalid point id '{}'", tok));
            return {tok};
        }
        auto split = [&](const std::string& s) {
            std::size_t k = s.size();
            while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
            if (k == 0 || k == s.size()) fail(Kind::Syntax, fmt::format("invalid id range '{}'", tok));
            return std::pair{s.substr(0, k), std::stoi(s.substr(k))};
        };
        auto [p1, lo] = split(tok.substr(0, dots));
        auto [p2, hi] = split(tok.substr(dots + 2));
        if (p1 != p2 || hi < lo) fail(Kind::Syntax, fmt::format("invalid id range '{}'", tok));
        std::vector<std::string> out;
        for (int i = lo; i <= hi; ++i) out.push_back(fmt::format("{}{}", p1, i));
        return out;
    }

    // Pairs written as "A=B" or "A1..A9=B1..B9", until end of line or `stop`.
    std::vector<std::pair<std::string, std::string>> pairs(std::string_view stop = {}) {
        std::vector<std::pair<std::string, std::string>> out;
        while (!at_end() && toks_[pos_] != stop) {
            const std::string t = next("mapping pair");
            const auto eq = t.find('=');
            if (eq == std::string::npos) fail(Kind::Syntax, fmt::format("expected SRC=DST, found '{}'", t));
            const auto lhs = expand(t.substr(0, eq));
            const auto rhs = expand(t.substr(eq + 1));
            if (lhs.size() != rhs.size()) fail(Kind::Syntax, fmt::format("range length mismatch in '{}'", t));
            for (std::size_t i = 0; i < lhs.size(); ++i) out.emplace_back(lhs[i], rhs[i]);
        }
        if (out.empty()) fail(Kind::Syntax, "expected at least one mapping pair");
        return out;
    }

    std::vector<std::string> id_list(std::string_view stop = {}) {
        std::vector<std::string> out;
        while (!at_end() && toks_[pos_] != stop) {
            for (auto& id : expand(next("point id"))) out.push_back(std::move(id));
        }
        if (out.empty()) fail(Kind::Syntax, "expected at least one point id");
        return out;
    }

    void push(Step s) { c_.steps.push_back({std::move(s), line_}); }

    void require_initial() {
        if (!have_initial_) fail(Kind::Invalid, "'points' must precede geometric steps");
    }

    void statement() {
        const std::string kw = next("keyword");
        if (kw == "param") return param();
        if (kw == "points") return points();
        if (kw == "rigid") return rigid();
        if (kw == "symmetry") return symmetry();
        if (kw == "solve") return solve();
        require_initial();
        if (kw == "edge") return edge();
        if (kw == "angle_edge") return angle_edge();
        if (kw == "apex") return apex();
        if (kw == "copy") return copy();
        if (kw == "closing_edge") return closing_edge();
        fail(Kind::Syntax, fmt::format("unknown keyword '{}'", kw));
    }

    // param NAME = DEG [in LO HI]
    void param() {
        const std::string name = next("parameter name");
        if (!is_identifier(name)) fail(Kind::Syntax, fmt::format("invalid parameter name '{}'", name));
        if (c_.parameters.contains(name)) fail(Kind::Invalid, fmt::format("parameter '{}' declared twice", name));
        expect("=");
        Parameter p;
        p.default_value = number("default value");
        if (!at_end()) {
            expect("in");
            p.lo = number("range low");
            p.hi = number("range high");
        }
        expect_end();
        if (p.lo > p.hi || p.default_value < p.lo || p.default_value > p.hi) {
            fail(Kind::Invalid, fmt::format("default of '{}' outside its range", name));
        }
        c_.parameters.emplace(name, p);
    }

    void points() {
        if (have_initial_) fail(Kind::Invalid, "'points' given twice");
        const std::string p = fresh_point();
        define(p);
        const std::string q = fresh_point();
        define(q);
        expect_end();
        have_initial_ = true;
        push(InitialPoints{p, q});
    }

    void edge() {
        const std::string a = existing_point();
        const std::string b = existing_point();
        expect_end();
        if (a == b) fail(Kind::Invalid, "edge endpoints must differ");
        push(PlainEdge{a, b});
    }

    // angle_edge NEW base B ref R angle (DEG|NAME) turn (+|-|?)
    void angle_edge() {
        AngleEdge s;
        s.fresh = fresh_point();
        expect("base");
        s.base = existing_point();
        expect("ref");
        s.ref = existing_point();
        if (s.base == s.ref) fail(Kind::Invalid, "base and ref must differ");
        expect("angle");
        const std::string a = next("angle");
        if (is_identifier(a)) {
            if (!c_.parameters.contains(a)) fail(Kind::UndeclaredParameter, fmt::format("undeclared parameter '{}'", a));
            s.angle = a;
        } else {
            --pos_;
            const double v = number("angle in degrees");
            if (!(v > 0.0 && v < 360.0)) fail(Kind::Invalid, "angle must lie in (0, 360)");
            s.angle = v;
        }
        expect("turn");
        s.turn = turn();
        expect_end();
        define(s.fresh);
        push(std::move(s));
    }

    // apex NEW over A B side (+|-|?)
    void apex() {
        Apex s;
        s.fresh = fresh_point();
        expect("over");
        s.base_a = existing_point();
        s.base_b = existing_point();
        if (s.base_a == s.base_b) fail(Kind::Invalid, "apex base points must differ");
        expect("side");
        s.side = turn();
        expect_end();
        define(s.fresh);
        push(std::move(s));
    }

    // copy IDS... about A B map SRC=DST...
    void copy() {
        Copy s;
        s.sources = id_list("about");
        expect("about");
        s.anchor_a = existing_point();
        s.anchor_b = existing_point();
        expect("map");
        auto mapping = pairs();
        std::set<std::string> src_set;
        for (const auto& id : s.sources) {
            known(id);
            if (!src_set.insert(id).second) fail(Kind::Invalid, fmt::format("'{}' listed twice in copy", id));
        }
        if (!src_set.contains(s.anchor_a) || !src_set.contains(s.anchor_b)) {
            fail(Kind::Invalid, "copy anchors must be among the sources");
        }
        std::map<std::string, std::string> m;
        std::set<std::string> targets;
        for (const auto& [from, to] : mapping) {
            if (!src_set.contains(from)) fail(Kind::Invalid, fmt::format("'{}' mapped but not a copy source", from));
            if (!m.emplace(from, to).second) fail(Kind::Invalid, fmt::format("'{}' mapped twice", from));
            if (!targets.insert(to).second) fail(Kind::Invalid, fmt::format("'{}' is the target of two points", to));
            if (!src_set.contains(to) && defined_.contains(to)) {
                fail(Kind::DuplicatePoint, fmt::format("copy target '{}' already defined", to));
            }
        }
        for (const auto& id : s.sources) {
            auto it = m.find(id);
            if (it == m.end()) fail(Kind::Invalid, fmt::format("copy source '{}' has no target", id));
            s.mapping.emplace_back(id, it->second);
        }
        for (const auto& [from, to] : s.mapping) {
            if (!defined_.contains(to)) define(to);
        }
        push(std::move(s));
    }

    void closing_edge() {
        if (have_closing_) fail(Kind::Invalid, "at most one closing_edge is allowed");
        const std::string a = existing_point();
        const std::string b = existing_point();
        expect_end();
        if (a == b) fail(Kind::Invalid, "closing edge endpoints must differ");
        have_closing_ = true;
        push(ClosingEdge{a, b});
    }

    // solve NAME [target LEN] bracket LO HI
    void solve() {
        if (c_.solve_directive() != nullptr) fail(Kind::Invalid, "at most one solve directive is allowed");
        SolveDirective s;
        s.parameter = next("parameter name");
        if (!c_.parameters.contains(s.parameter)) {
            fail(Kind::UndeclaredParameter, fmt::format("undeclared parameter '{}'", s.parameter));
        }
        if (!at_end() && toks_[pos_] == "target") {
            ++pos_;
            s.target = number("target length");
            if (!(s.target > 0.0)) fail(Kind::Invalid, "target length must be positive");
        }
        expect("bracket");
        s.lo = number("bracket low");
        s.hi = number("bracket high");
        expect_end();
        const Parameter& p = c_.parameters.at(s.parameter);
        if (!(s.lo < s.hi) || s.lo < p.lo || s.hi > p.hi) {
            fail(Kind::Invalid, "solve bracket must be increasing and inside the parameter range");
        }
        push(s);
    }

    // rigid NAME IDS...
    void rigid() {
        const std::string name = next("part name");
        if (!is_identifier(name)) fail(Kind::Syntax, fmt::format("invalid part name '{}'", name));
        auto ids = id_list();
        auto& part = c_.metadata.rigid_parts[name];
        for (auto& id : ids) {
            deferred_.emplace_back(id, line_);
            part.push_back(std::move(id));
        }
    }

    // symmetry about A B map SRC=DST...   (inverse pairs are implied)
    void symmetry() {
        if (c_.metadata.symmetry) fail(Kind::Invalid, "symmetry given twice");
        Symmetry s;
        expect("about");
        s.anchor_a = point_token();
        s.anchor_b = point_token();
        expect("map");
        for (const auto& [a, b] : pairs()) {
            for (const auto& [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
                auto [it, inserted] = s.mapping.emplace(from, to);
                if (!inserted && it->second != to) {
                    fail(Kind::Invalid, fmt::format("symmetry maps '{}' to both '{}' and '{}'", from, it->second, to));
                }
            }
        }
        for (const auto& id : {s.anchor_a, s.anchor_b}) deferred_.emplace_back(id, line_);
        for (const auto& [from, to] : s.mapping) deferred_.emplace_back(from, line_);
        c_.metadata.symmetry = std::move(s);
    }

    void finish() {
        if (!have_initial_) throw ScriptError(Kind::Invalid, 0, "script has no 'points' statement");
        for (const auto& [id, line] : deferred_) {
            if (!defined_.contains(id)) throw ScriptError(Kind::UnknownPoint, line, fmt::format("unknown point '{}'", id));
        }
    }

    Construction c_;
    std::set<std::string> defined_;
    std::vector<std::pair<std::string, int>> deferred_;
    std::vector<std::string> toks_;
    std::size_t pos_ = 0;
    int line_ = 0;
    bool have_initial_ = false;
    bool have_closing_ = false;
};

}  // namespace

Construction parse_script(std::string_view text) { return Parser{}.run(text); }

Construction load_script(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScriptError(Kind::Invalid, 0, fmt::format("cannot open script '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_script(ss.str());
}

}  // namespace matchstick
