#include "hardy/cfe.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hardy {

namespace {

// Nearest even integer to n/d (d != 0); ties cannot be broken here and
// are the caller's business.
Integer nearest_even(const Integer &n, const Integer &d)
{
    // 2 * floor((n/d + 1) / 2)
    return 2 * floor_div(n + d, 2 * d);
}

bool is_odd_integer(const Rational &r)
{
    return r.is_integer() && is_odd(r.num());
}

void push_letter(GeneratorWord &w, Generator g, const Integer &e)
{
    if (e == 0) {
        return;
    }
    if (!w.letters.empty() && w.letters.back().gen == g) {
        w.letters.back().exponent += e;
        if (w.letters.back().exponent == 0) {
            w.letters.pop_back();
        }
        return;
    }
    w.letters.push_back(Letter{g, e});
}

[[noreturn]] void malformed(const std::string &what)
{
    throw std::domain_error("malformed expansion: " + what);
}

} // namespace

std::string_view to_string(CfKind kind)
{
    switch (kind) {
    case CfKind::Classical:
        return "classical";
    case CfKind::ThetaNeg:
        return "theta";
    case CfKind::Gamma02Pos:
        return "gamma02";
    }
    return "?";
}

void validate(const ContinuedFraction &cf)
{
    for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
        if (cf.quotients[i] == 0) {
            malformed("quotient " + std::to_string(i + 1) + " is zero");
        }
    }
    switch (cf.kind) {
    case CfKind::Classical:
        for (const auto &q : cf.quotients) {
            if (q < 1) {
                malformed("classical quotients must be positive");
            }
        }
        break;
    case CfKind::ThetaNeg:
        if (!is_even(cf.head)) {
            malformed("theta-type head must be even");
        }
        for (const auto &q : cf.quotients) {
            if (!is_even(q)) {
                malformed("theta-type quotients must be even");
            }
        }
        break;
    case CfKind::Gamma02Pos: {
        const std::size_t n = cf.quotients.size();
        if (!is_even(cf.head)) {
            malformed("gamma02-type head must be even");
        }
        if (n % 2 == 0) {
            malformed("gamma02-type expansion must have odd length");
        }
        for (std::size_t k = 1; k <= n; ++k) {
            const Integer &q = cf.quotients[k - 1];
            if (k % 2 == 0 && !is_even(q)) {
                malformed("gamma02-type quotient at even position " + std::to_string(k) + " must be even");
            }
            if (k % 2 == 1 && k + 2 <= n && abs(q) <= 1) {
                malformed("gamma02-type quotient at odd position " + std::to_string(k) + " must exceed 1 in absolute value");
            }
        }
        break;
    }
    }
}

bool is_valid(const ContinuedFraction &cf)
{
    try {
        validate(cf);
        return true;
    } catch (const std::domain_error &) {
        return false;
    }
}

Rational eval_cf(const ContinuedFraction &cf)
{
    if (cf.quotients.empty()) {
        return Rational(cf.head);
    }
    const bool negative = cf.kind == CfKind::ThetaNeg;
    Rational v(cf.quotients.back());
    for (auto it = cf.quotients.rbegin() + 1; it != cf.quotients.rend(); ++it) {
        if (v.is_zero()) {
            malformed("zero denominator while evaluating");
        }
        v = negative ? Rational(*it) - v.inverse() : Rational(*it) + v.inverse();
    }
    if (v.is_zero()) {
        malformed("zero denominator while evaluating");
    }
    return negative ? Rational(cf.head) - v.inverse() : Rational(cf.head) + v.inverse();
}

ContinuedFraction expand_theta(const Rational &x)
{
    if (is_even(x.num() + x.den())) {
        throw ParityError("theta-type expansion of d/c requires c + d odd (got " + x.str() + ")");
    }
    ContinuedFraction cf{CfKind::ThetaNeg, nearest_even(x.num(), x.den()), {}};
    // remainder num/den in (-1, 1), den > 0
    Integer num = x.num() - cf.head * x.den();
    Integer den = x.den();
    while (num != 0) {
        // y = -den/num, pick the even 2c with |y - 2c| < 1
        Integer two_c = nearest_even(-den, num);
        Integer next = -den - two_c * num; // (y - 2c) * num
        if (abs(next) >= abs(num) || two_c == 0) {
            throw std::logic_error("theta expansion: no unique even quotient for " + x.str());
        }
        cf.quotients.push_back(two_c);
        if (num < 0) {
            next = -next;
        }
        den = abs(num);
        num = next;
    }
    return cf;
}

ContinuedFraction expand_gamma02(const Rational &x)
{
    if (is_even(x.num())) {
        throw ParityError("gamma02-type expansion of d/c requires d odd (got " + x.str() + ")");
    }
    ContinuedFraction cf{CfKind::Gamma02Pos, 0, {}};
    if (is_odd_integer(x)) {
        cf.head = x.num() - sign(x.num());
    } else {
        cf.head = nearest_even(x.num(), x.den());
    }
    Rational r = x - Rational(cf.head);
    for (std::size_t pos = 1;; ++pos) {
        if (r.is_zero() || r.abs() > Rational(1)) {
            throw std::logic_error("gamma02 expansion left [-1, 1] for " + x.str());
        }
        Rational y = r.inverse();
        Integer q;
        if (pos % 2 == 1) {
            if (is_odd_integer(y)) {
                cf.quotients.push_back(y.num());
                break;
            }
            q = nearest_even(y.num(), y.den());
        } else if (is_odd_integer(y)) {
            q = y.num() - sign(y.num());
        } else {
            q = nearest_even(y.num(), y.den());
        }
        if (q == 0) {
            throw std::logic_error("gamma02 expansion produced a zero quotient for " + x.str());
        }
        cf.quotients.push_back(q);
        r = y - Rational(q);
        if (r.is_zero()) {
            if (pos % 2 == 0) {
                throw std::logic_error("gamma02 expansion stopped at even length for " + x.str());
            }
            break;
        }
    }
    return cf;
}

ContinuedFraction normalize_odd_length(const ContinuedFraction &cf)
{
    ContinuedFraction out = cf;
    auto &q = out.quotients;
    if (q.empty() || q.size() % 2 == 1) {
        return out;
    }
    if (q.back() != 1) {
        q.back() -= 1;
        q.push_back(1);
    } else {
        q.pop_back();
        q.back() += 1;
    }
    return out;
}

ContinuedFraction expand_classical(const Rational &x)
{
    ContinuedFraction cf{CfKind::Classical, x.floor(), {}};
    Rational r = x - Rational(cf.head);
    while (!r.is_zero()) {
        Rational y = r.inverse();
        Integer a = y.floor();
        cf.quotients.push_back(a);
        r = y - Rational(a);
    }
    return normalize_odd_length(cf);
}

ContinuedFraction expand_classical_odd(const Rational &x)
{
    if (x <= Rational(0) || x >= Rational(1)) {
        throw std::domain_error("classical odd-length expansion needs 0 < x < 1 (got " + x.str() + ")");
    }
    return expand_classical(x);
}

ContinuedFraction expand_all_even(const Rational &x)
{
    ContinuedFraction cf = expand_gamma02(x);
    const auto &q = cf.quotients;
    bool ok = q.size() % 2 == 1;
    for (std::size_t i = 0; ok && i + 1 < q.size(); ++i) {
        ok = is_even(q[i]);
    }
    if (!ok) {
        throw std::logic_error("expansion of " + x.str() + " is not of the form [2a0; 2a1, ..., 2a_{n-1}, a_n] with n odd");
    }
    return cf;
}

Rational Convergents::value(std::size_t k) const
{
    const auto &[p, q] = at(k);
    return Rational(p, q);
}

Convergents negative_convergents(const std::vector<Integer> &quotients)
{
    Convergents out;
    Integer p_prev = 1, q_prev = 0; // k - 2
    Integer p = 0, q = 1;           // k - 1
    for (const auto &c : quotients) {
        if (c == 0) {
            malformed("zero quotient in convergent recurrence");
        }
        Integer p_next = c * p - p_prev;
        Integer q_next = c * q - q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.pairs.emplace_back(p, q);
    }
    return out;
}

Convergents convergents(const ContinuedFraction &cf)
{
    if (cf.kind != CfKind::ThetaNeg || cf.head != 0) {
        throw std::domain_error("convergents are defined for theta-type expansions with zero head");
    }
    validate(cf);
    return negative_convergents(cf.quotients);
}

std::string_view to_string(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

Parity parity_of(const Integer &v)
{
    return is_even(v) ? Parity::Even : Parity::Odd;
}

Parity parity_of_length(const ContinuedFraction &cf)
{
    if (!is_even(cf.head)) {
        malformed("head must be even");
    }
    for (std::size_t k = 2; k <= cf.quotients.size(); k += 2) {
        if (!is_even(cf.quotients[k - 1])) {
            malformed("quotient at even position " + std::to_string(k) + " must be even");
        }
    }
    return cf.quotients.size() % 2 == 0 ? Parity::Even : Parity::Odd;
}

Mat2 letter_matrix(const Letter &l)
{
    switch (l.gen) {
    case Generator::T:
        return Mat2::T(l.exponent);
    case Generator::T2:
        return Mat2::T(2 * l.exponent);
    case Generator::V:
        return Mat2::V(l.exponent);
    case Generator::S:
        return Mat2::S().pow(floor_mod(l.exponent, 4).get_si());
    }
    throw std::logic_error("unknown generator");
}

Mat2 evaluate(const GeneratorWord &w)
{
    Mat2 m = Mat2::identity();
    for (const auto &l : w.letters) {
        m = m * letter_matrix(l);
    }
    return w.sign < 0 ? -m : m;
}

std::string to_string(const GeneratorWord &w)
{
    std::ostringstream os;
    if (w.sign < 0) {
        os << "-";
    }
    if (w.letters.empty()) {
        os << "I";
    }
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const auto &l = w.letters[i];
        if (i > 0) {
            os << " ";
        }
        switch (l.gen) {
        case Generator::T:
            os << "T";
            break;
        case Generator::T2:
            os << "T2";
            break;
        case Generator::S:
            os << "S";
            break;
        case Generator::V:
            os << "V";
            break;
        }
        if (l.exponent != 1) {
            os << "^" << l.exponent;
        }
    }
    return os.str();
}

GeneratorWord cf_to_word(const ContinuedFraction &cf)
{
    GeneratorWord w;
    switch (cf.kind) {
    case CfKind::ThetaNeg:
        validate(cf);
        push_letter(w, Generator::T2, cf.head / 2);
        push_letter(w, Generator::S, 1);
        for (const auto &q : cf.quotients) {
            push_letter(w, Generator::T2, q / 2);
            push_letter(w, Generator::S, 1);
        }
        break;
    case CfKind::Gamma02Pos:
        validate(cf);
        push_letter(w, Generator::T2, cf.head / 2);
        for (std::size_t k = 1; k <= cf.quotients.size(); ++k) {
            const Integer &q = cf.quotients[k - 1];
            if (k % 2 == 1) {
                push_letter(w, Generator::V, q);
            } else {
                push_letter(w, Generator::T2, q / 2);
            }
        }
        break;
    case CfKind::Classical: {
        validate(cf);
        ContinuedFraction odd = normalize_odd_length(cf);
        if (odd.quotients.empty()) {
            // n = [n - 1; 1], so that the word still moves infinity to n
            odd.head -= 1;
            odd.quotients.push_back(1);
        }
        push_letter(w, Generator::T, odd.head);
        for (std::size_t k = 1; k <= odd.quotients.size(); ++k) {
            push_letter(w, k % 2 == 1 ? Generator::V : Generator::T, odd.quotients[k - 1]);
        }
        break;
    }
    }
    return w;
}

GeneratorWord word_from_matrix(const Mat2 &m, GroupTag tag)
{
    if (!in_group(m, tag)) {
        throw std::domain_error("matrix " + m.str() + " is not in " + std::string(to_string(tag)));
    }
    GeneratorWord w;
    if (m.c() != 0) {
        Rational x(m.a(), m.c());
        switch (tag) {
        case GroupTag::Theta:
            w = cf_to_word(expand_theta(x));
            break;
        case GroupTag::Gamma02:
            w = cf_to_word(expand_gamma02(x));
            break;
        case GroupTag::SL2:
            w = cf_to_word(expand_classical(x));
            break;
        }
    }
    // What is left fixes the cusp at infinity: +-T^j.
    Mat2 rest = evaluate(w).inverse() * m;
    if (rest.c() != 0 || abs(rest.a()) != 1) {
        throw std::logic_error("word decomposition left a residual that does not fix infinity: " + rest.str());
    }
    const int s = sign(rest.a());
    Integer j = s * rest.b();
    if (tag == GroupTag::SL2) {
        push_letter(w, Generator::T, j);
    } else {
        if (!is_even(j)) {
            throw std::logic_error("odd translation left over in " + std::string(to_string(tag)));
        }
        push_letter(w, Generator::T2, j / 2);
    }
    if (s < 0) {
        if (tag == GroupTag::Gamma02) {
            // T^2 V^-1 T^2 = -V
            push_letter(w, Generator::T2, 1);
            push_letter(w, Generator::V, -1);
            push_letter(w, Generator::T2, 1);
            push_letter(w, Generator::V, -1);
        } else {
            push_letter(w, Generator::S, 2);
        }
    }
    if (!(evaluate(w) == m)) {
        throw std::logic_error("word decomposition does not reproduce " + m.str());
    }
    return w;
}

namespace {

std::string join(const std::vector<std::string> &items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += items[i];
    }
    return out;
}

std::string wrap(const ContinuedFraction &cf, const std::string &body)
{
    switch (cf.kind) {
    case CfKind::ThetaNeg:
        return "[[" + (cf.head != 0 ? cf.head.get_str() + ";" : std::string()) + body + "]]";
    case CfKind::Gamma02Pos:
        return "[" + (cf.head != 0 ? cf.head.get_str() + ";" : std::string()) + body + "]";
    case CfKind::Classical:
        return "[" + cf.head.get_str() + ";" + body + "]";
    }
    return body;
}

} // namespace

std::string format_cf(const ContinuedFraction &cf)
{
    std::vector<std::string> items;
    for (const auto &q : cf.quotients) {
        items.push_back(q.get_str());
    }
    return wrap(cf, join(items));
}

std::string format_cf_compressed(const ContinuedFraction &cf)
{
    std::vector<std::string> items;
    const auto &q = cf.quotients;
    for (std::size_t i = 0; i < q.size();) {
        std::size_t j = i;
        while (j < q.size() && q[j] == q[i]) {
            ++j;
        }
        const std::size_t run = j - i;
        if (run >= 6) {
            items.push_back(q[i].get_str());
            items.push_back("...(" + std::to_string(run - 2) + ")");
            items.push_back(q[i].get_str());
        } else {
            for (std::size_t k = i; k < j; ++k) {
                items.push_back(q[k].get_str());
            }
        }
        i = j;
    }
    return wrap(cf, join(items));
}

namespace {

std::vector<Integer> parse_list(std::string_view body)
{
    std::vector<Integer> out;
    std::size_t pos = 0;
    if (body.empty()) {
        return out;
    }
    while (true) {
        auto comma = body.find(',', pos);
        auto item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(parse_integer(item));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

} // namespace

ContinuedFraction parse_cf(std::string_view text, CfKind kind)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    const bool doubled = s.starts_with("[[") && s.ends_with("]]");
    const bool single = !doubled && s.starts_with("[") && s.ends_with("]") && s.size() >= 2;
    if (kind == CfKind::ThetaNeg ? !doubled : !single) {
        throw std::invalid_argument("malformed " + std::string(to_string(kind)) + " expansion: '" + std::string(text) + "'");
    }
    const std::size_t br = doubled ? 2 : 1;
    std::string_view body(s);
    body = body.substr(br, body.size() - 2 * br);

    ContinuedFraction cf{kind, 0, {}};
    auto semi = body.find(';');
    if (semi != std::string_view::npos) {
        cf.head = parse_integer(body.substr(0, semi));
        cf.quotients = parse_list(body.substr(semi + 1));
    } else if (kind == CfKind::Classical) {
        auto items = parse_list(body);
        if (items.empty()) {
            throw std::invalid_argument("classical expansion needs a head");
        }
        cf.head = items.front();
        cf.quotients.assign(items.begin() + 1, items.end());
    } else {
        cf.quotients = parse_list(body);
    }
    validate(cf);
    return cf;
}

ContinuedFraction parse_cf(std::string_view text)
{
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) {
        t.remove_prefix(1);
    }
    if (t.starts_with("[[")) {
        return parse_cf(text, CfKind::ThetaNeg);
    }
    if (t.find(';') != std::string_view::npos) {
        return parse_cf(text, CfKind::Classical);
    }
    return parse_cf(text, CfKind::Gamma02Pos);
}

} // namespace hardy
