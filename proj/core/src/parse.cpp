#include "simplexbound/parse.hpp"

#include <cctype>
#include <sstream>

#include "simplexbound/errors.hpp"

namespace simplexbound {

namespace {

class Parser {
  public:
    Parser(const std::string& text, unsigned nvars) : s_(text), k_(nvars) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& s_;
    unsigned k_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "syntax error at position " << (pos_ + 1) << ": " << what;
        throw InputError(os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    MultiPoly factor() {
        if (eat('-')) return MultiPoly::constant(k_, Int(-1)) * factor();
        MultiPoly b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("exponent must be a nonnegative integer literal");
            Int e = natural();
            if (!e.fits_ulong_p()) fail("exponent too large");
            return b.pow(e.get_ui());
        }
        return b;
    }

    MultiPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(k_, natural());
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("expected a number, a variable, or '('");
    }

    Int natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        Int n;
        n.set_str(s_.substr(start, pos_ - start), 10);
        return n;
    }

    MultiPoly variable() {
        skip_ws();
        std::size_t start = pos_;
        char c = s_[pos_++];
        unsigned idx;
        if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            unsigned long n = std::stoul(s_.substr(dstart, pos_ - dstart));
            if (n < 1 || n > k_) {
                pos_ = start;
                fail("unknown variable (index out of range)");
            }
            idx = static_cast<unsigned>(n - 1);
        } else if ((c == 'x' || c == 'y' || c == 'z') && k_ <= 3) {
            idx = static_cast<unsigned>(c - 'x');
            if (idx >= k_) {
                pos_ = start;
                fail("unknown variable (index out of range)");
            }
        } else {
            pos_ = start;
            fail("unknown variable");
        }
        return MultiPoly::variable(k_, idx);
    }
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, unsigned nvars) {
    return Parser(text, nvars).run();
}

std::string render_polynomial(const MultiPoly& P) {
    if (P.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : P.terms()) {
        Int a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        bool any_var = false;
        for (unsigned long e : exps)
            if (e) any_var = true;
        if (!any_var) {
            os << a.get_str();
            continue;
        }
        bool lead = true;
        if (a != 1) {
            os << a.get_str();
            lead = false;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << "x" << (i + 1);
            if (exps[i] >= 2) os << "^" << exps[i];
        }
    }
    return os.str();
}

}  // namespace simplexbound
