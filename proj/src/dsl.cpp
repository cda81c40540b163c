#include "bunmot/dsl.hpp"

#include <cctype>

namespace bunmot {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

class Parser {
public:
    explicit Parser(const std::string& src) : s_(src) {}

    Expr run() {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) fail({"'+'", "'*'", "'{'", "end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip();
        std::string found = pos_ < s_.size() ? "'" + s_.substr(pos_, 1) + "'" : "end of input";
        throw SyntaxError(pos_, std::move(expected), found);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_char(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat_char(char c) {
        if (!peek_char(c)) return false;
        ++pos_;
        return true;
    }

    void expect_char(char c) {
        if (!eat_char(c)) fail({std::string("'") + c + "'"});
    }

    std::string word() {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::optional<Integer> integer(bool allow_sign) {
        skip();
        const auto start = pos_;
        if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        const auto digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            return std::nullopt;
        }
        return Integer(s_.substr(start, pos_ - start));
    }

    Integer argument(bool allow_sign) {
        expect_char('(');
        auto v = integer(allow_sign);
        if (!v) fail({allow_sign ? "integer" : "natural number"});
        expect_char(')');
        return *v;
    }

    Expr sum() {
        Expr first = prod();
        if (!peek_char('+')) return first;
        Expr e{Expr::Kind::Sum, 0, {std::move(first)}};
        while (eat_char('+')) e.children.push_back(prod());
        return e;
    }

    Expr prod() {
        Expr first = twisted();
        if (!peek_char('*')) return first;
        Expr e{Expr::Kind::Prod, 0, {std::move(first)}};
        while (eat_char('*')) e.children.push_back(twisted());
        return e;
    }

    Expr twisted() {
        Expr e = primary();
        while (eat_char('{')) {
            auto k = integer(true);
            if (!k) fail({"integer"});
            expect_char('}');
            e = Expr{Expr::Kind::Twist, *k, {std::move(e)}};
        }
        return e;
    }

    Expr primary() {
        if (eat_char('(')) {
            Expr e = sum();
            expect_char(')');
            return e;
        }
        if (auto v = integer(false)) return Expr{Expr::Kind::Int, *v, {}};
        const auto start = pos_;
        const std::string w = word();
        if (w == "L") return {Expr::Kind::L, 0, {}};
        if (w == "Jac") return {Expr::Kind::Jac, 0, {}};
        if (w == "BGm") return {Expr::Kind::BGm, 0, {}};
        if (w == "BGmC") return {Expr::Kind::BGmC, 0, {}};
        if (w == "P") return {Expr::Kind::P, argument(false), {}};
        if (w == "Sym") return {Expr::Kind::Sym, argument(false), {}};
        if (w == "Z") return {Expr::Kind::Z, argument(true), {}};
        if (w == "dual") {
            expect_char('(');
            Expr inner = sum();
            expect_char(')');
            return {Expr::Kind::Dual, 0, {std::move(inner)}};
        }
        pos_ = start;
        fail({"integer", "'('", "'L'", "'Jac'", "'BGm'", "'BGmC'", "'P'", "'Sym'", "'Z'", "'dual'"});
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

int small_int(const Integer& v, const char* what) {
    if (!v.fits_sint_p()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " out of range");
    return static_cast<int>(v.get_si());
}

int need_genus(const std::optional<int>& g, const char* what) {
    if (!g) throw Error(ErrorKind::UnboundGenus, std::string(what) + " needs a genus binding");
    return *g;
}

Region swap_gradings(const Region& r) { return {r.twist.negated(), r.vd.negated()}; }

/// Int, P and Sym are finite; everything else is built through its own constructor.
MotClass exact_leaf(const Expr& e, const std::optional<int>& genus) {
    switch (e.kind) {
    case Expr::Kind::Int:
        return MotClass::exact({{Term{Atom::unit(), 0}, e.value}});
    case Expr::Kind::L:
        return lefschetz(1);
    case Expr::Kind::Jac:
        return jac_class(need_genus(genus, "Jac"));
    case Expr::Kind::P:
        return projective_space(small_int(e.value, "P argument"));
    case Expr::Kind::Sym:
        return sym_class(small_int(e.value, "Sym argument"));
    default:
        throw Error(ErrorKind::InvalidArgument, "not a finite leaf");
    }
}

} // namespace

bool Expr::operator==(const Expr& other) const {
    return kind == other.kind && value == other.value && children == other.children;
}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::SyntaxError,
            "at offset " + std::to_string(offset) + ": expected " + join(expected) + ", found " + found),
      offset_(offset), expected_(std::move(expected)) {}

Expr parse(const std::string& src) { return Parser(src).run(); }

std::string render(const Expr& e) {
    auto child = [](const Expr& c, bool wrap) { return wrap ? "(" + render(c) + ")" : render(c); };
    switch (e.kind) {
    case Expr::Kind::Int:
        return e.value.get_str();
    case Expr::Kind::L:
        return "L";
    case Expr::Kind::Jac:
        return "Jac";
    case Expr::Kind::BGm:
        return "BGm";
    case Expr::Kind::BGmC:
        return "BGmC";
    case Expr::Kind::P:
        return "P(" + e.value.get_str() + ")";
    case Expr::Kind::Sym:
        return "Sym(" + e.value.get_str() + ")";
    case Expr::Kind::Z:
        return "Z(" + e.value.get_str() + ")";
    case Expr::Kind::Dual:
        return "dual(" + render(e.children[0]) + ")";
    case Expr::Kind::Twist: {
        const auto& c = e.children[0];
        return child(c, c.kind == Expr::Kind::Sum || c.kind == Expr::Kind::Prod) + "{" + e.value.get_str() + "}";
    }
    case Expr::Kind::Sum: {
        std::string s;
        for (std::size_t i = 0; i < e.children.size(); ++i)
            s += (i ? " + " : "") + child(e.children[i], e.children[i].kind == Expr::Kind::Sum);
        return s;
    }
    case Expr::Kind::Prod: {
        std::string s;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            const auto k = e.children[i].kind;
            s += (i ? " * " : "") + child(e.children[i], k == Expr::Kind::Sum || k == Expr::Kind::Prod);
        }
        return s;
    }
    }
    return {};
}

Region expr_support(const Expr& e, std::optional<int> genus) {
    switch (e.kind) {
    case Expr::Kind::Int:
    case Expr::Kind::L:
    case Expr::Kind::Jac:
    case Expr::Kind::P:
    case Expr::Kind::Sym:
        return exact_leaf(e, genus).support();
    case Expr::Kind::BGm:
        return bgm_hom_support();
    case Expr::Kind::BGmC:
        return bgm_k0_support();
    case Expr::Kind::Z:
        return zeta_support(small_int(e.value, "Z argument"));
    case Expr::Kind::Dual:
        need_genus(genus, "dual");
        return swap_gradings(expr_support(e.children[0], genus));
    case Expr::Kind::Twist:
        return expr_support(e.children[0], genus).shifted(small_int(e.value, "twist"));
    case Expr::Kind::Sum: {
        Region r{Interval::empty(), Interval::empty()};
        for (const auto& c : e.children) r = r.hull(expr_support(c, genus));
        return r;
    }
    case Expr::Kind::Prod: {
        Region r{Interval::point(0), Interval::point(0)};
        for (const auto& c : e.children) r = r.plus(expr_support(c, genus));
        return r;
    }
    }
    return Region::all();
}

MotClass eval(const Expr& e, std::optional<int> genus, const Region& window) {
    MotClass out;
    switch (e.kind) {
    case Expr::Kind::Int:
    case Expr::Kind::L:
    case Expr::Kind::Jac:
    case Expr::Kind::P:
    case Expr::Kind::Sym:
        out = exact_leaf(e, genus);
        break;
    case Expr::Kind::BGm:
        out = bgm_hom(window);
        break;
    case Expr::Kind::BGmC:
        out = bgm_k0(window);
        break;
    case Expr::Kind::Z:
        out = zeta_class(small_int(e.value, "Z argument"), window);
        break;
    case Expr::Kind::Dual: {
        const int g = need_genus(genus, "dual");
        out = dual(eval(e.children[0], genus, swap_gradings(window)), g);
        break;
    }
    case Expr::Kind::Twist: {
        const int k = small_int(e.value, "twist");
        out = twist(eval(e.children[0], genus, window.shifted(-k)), k);
        break;
    }
    case Expr::Kind::Sum:
        out = eval(e.children[0], genus, window);
        for (std::size_t i = 1; i < e.children.size(); ++i) out = add(out, eval(e.children[i], genus, window));
        break;
    case Expr::Kind::Prod: {
        std::vector<Factor> fs;
        for (const auto& c : e.children)
            fs.push_back({expr_support(c, genus), [&c, genus](const Region& r) { return eval(c, genus, r); }});
        out = product_in_region(fs, window);
        break;
    }
    }
    if (genus) out = MotClass::truncated(out.terms(), out.window(), out.support(), unify_genus(out.genus(), genus));
    return restrict_to(out, window);
}

LaurentQ realize(const Expr& e, const ValidatedCurve& c, std::int64_t T) {
    if (T < 0) throw Error(ErrorKind::InvalidArgument, "truncation must be non-negative");
    const Region window{Interval::at_least(-T), Interval::at_least(-T)};
    return count_realize(eval(e, c.genus(), window), c);
}

} // namespace bunmot
