#include "hardy/table.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "hardy/sums.hpp"

namespace hardy {

std::vector<TableRow> build_table(long max_c)
{
    if (max_c < 2) {
        throw std::domain_error("max_c must be at least 2");
    }
    std::vector<TableRow> rows;
    for (long c = 2; c <= max_c; ++c) {
        for (long d = 1; d < c; ++d) {
            const Integer D(d), C(c);
            if (gcd(D, C) != 1) {
                continue;
            }
            TableRow row{D, C, {}, {}, {}, {}};
            const Rational x{D, C};
            if ((c + d) % 2 == 1) {
                row.theta = expand_theta(x);
                row.s = hardy_s_formula(*row.theta);
            }
            if (d % 2 == 1) {
                row.gamma02 = expand_gamma02(x);
                row.s4 = hardy_s4_formula(*row.gamma02);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

template <class T, class F>
std::string or_x(const std::optional<T> &v, F f)
{
    return v ? f(*v) : std::string("x");
}

std::string pad(const std::string &s, std::size_t w)
{
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
}

} // namespace

std::string format_table_text(const std::vector<TableRow> &rows)
{
    std::vector<std::array<std::string, 5>> cells;
    cells.push_back({"(d, c)", "theta", "S", "gamma02", "S4"});
    for (const auto &r : rows) {
        auto str = [](const Integer &v) { return v.get_str(); };
        cells.push_back({"(" + r.d.get_str() + ", " + r.c.get_str() + ")",
                         or_x(r.theta, format_cf_compressed), or_x(r.s, str),
                         or_x(r.gamma02, format_cf_compressed), or_x(r.s4, str)});
    }
    std::array<std::size_t, 5> width{};
    for (const auto &row : cells) {
        for (std::size_t i = 0; i < 5; ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::ostringstream os;
    for (const auto &row : cells) {
        std::string line;
        for (std::size_t i = 0; i < 5; ++i) {
            line += (i == 0 ? "" : " | ") + pad(row[i], width[i]);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << '\n';
    }
    return os.str();
}

std::string format_table_csv(const std::vector<TableRow> &rows)
{
    auto str = [](const Integer &v) { return v.get_str(); };
    auto quoted = [](const ContinuedFraction &cf) { return "\"" + format_cf(cf) + "\""; };
    std::ostringstream os;
    os << "d,c,theta,S,gamma02,S4\n";
    for (const auto &r : rows) {
        os << r.d << ',' << r.c << ',' << or_x(r.theta, quoted) << ',' << or_x(r.s, str) << ','
           << or_x(r.gamma02, quoted) << ',' << or_x(r.s4, str) << '\n';
    }
    return os.str();
}

const std::vector<ReferenceRow> &reference_table()
{
    static const std::vector<ReferenceRow> rows = {
        {1, 2, "[[-2]]", "1", "[2]", "1"},
        {1, 3, "x", "x", "[3]", "2"},
        {2, 3, "[[-2,-2]]", "2", "x", "x"},
        {1, 4, "[[-4]]", "1", "[4]", "3"},
        {3, 4, "[[-2,-2,-2]]", "3", "[2,-2,2]", "1"},
        {1, 5, "x", "x", "[5]", "4"},
        {2, 5, "[[-2,2]]", "0", "x", "x"},
        {3, 5, "x", "x", "[2,-2,-1]", "0"},
        {4, 5, "[[-2,-2,-2,-2]]", "4", "x", "x"},
        {1, 6, "[[-6]]", "1", "[6]", "5"},
        {5, 6, "[[-2,-2,-2,-2,-2]]", "5", "[2,-2,2,-2,2]", "1"},
        {1, 7, "x", "x", "[7]", "6"},
        {2, 7, "[[0,-4,-2]]", "2", "x", "x"},
        {3, 7, "x", "x", "[2,2,1]", "2"},
        {4, 7, "[[-2,-4]]", "2", "x", "x"},
        {5, 7, "x", "x", "[2,-2,3]", "2"},
        {6, 7, "[[-2,...(4),-2]]", "6", "x", "x"},
        {1, 8, "[[-8]]", "1", "[8]", "7"},
        {3, 8, "[[-2,2,2]]", "-1", "[3,-2,-1]", "1"},
        {5, 8, "[[-2,-2,2]]", "1", "[2,-2,-2]", "-1"},
        {7, 8, "[[-2,...(5),-2]]", "7", "[2,-2,2,-2,2,-2,2]", "1"},
        {1, 9, "x", "x", "[9]", "8"},
        {2, 9, "[[-4,2]]", "0", "x", "x"},
        {4, 9, "[[-2,4]]", "0", "x", "x"},
        {5, 9, "x", "x", "[2,-4,-1]", "0"},
        {7, 9, "x", "x", "[2,-2,2,-2,-1]", "0"},
        {8, 9, "[[-2,...(6),-2]]", "8", "x", "x"},
        {1, 10, "[[-10]]", "1", "[10]", "9"},
        {3, 10, "[[-4,-2,-2]]", "3", "[3,2,1]", "3"},
        {7, 10, "[[-2,-2,-4]]", "3", "[2,-2,4]", "3"},
        {9, 10, "[[-2,...(7),-2]]", "9", "[2,-2,2,-2,2,-2,2,-2,2]", "1"},
    };
    return rows;
}

std::string normalize_theta_text(std::string text)
{
    if (text.rfind("[[0,", 0) == 0) {
        text.erase(2, 2);
    }
    return text;
}

RowCheck check_row(const TableRow &computed, const ReferenceRow &ref)
{
    RowCheck out;
    auto fail = [&](const std::string &why) {
        if (out.pass) {
            out.pass = false;
            out.problem = "(" + std::to_string(ref.d) + ", " + std::to_string(ref.c) + "): " + why;
        }
    };
    if (computed.d != ref.d || computed.c != ref.c) {
        fail("row order differs");
        return out;
    }
    const std::string s = computed.s ? computed.s->get_str() : "x";
    const std::string s4 = computed.s4 ? computed.s4->get_str() : "x";
    if (s != ref.s) {
        fail("S = " + s + ", expected " + ref.s);
    }
    if (s4 != ref.s4) {
        fail("S4 = " + s4 + ", expected " + ref.s4);
    }
    const std::string theta = computed.theta ? format_cf_compressed(*computed.theta) : "x";
    if (theta != normalize_theta_text(ref.theta)) {
        fail("theta expansion " + theta + ", expected " + ref.theta);
    }
    const Rational x{computed.d, computed.c};
    if (std::string(ref.gamma02) == "x") {
        if (computed.gamma02) {
            fail("gamma02 expansion present, expected x");
        }
    } else if (!computed.gamma02) {
        fail("gamma02 expansion missing");
    } else if (!is_valid(*computed.gamma02) || eval_cf(*computed.gamma02) != x) {
        fail("gamma02 expansion " + format_cf(*computed.gamma02) + " is not a valid expansion of d/c");
    } else {
        // The printed expansion need not be the one computed, but it has to
        // be valid too and give the same S4.
        const auto printed = parse_cf(ref.gamma02, CfKind::Gamma02Pos);
        if (eval_cf(printed) != x || hardy_s4_formula(printed) != *computed.s4) {
            fail(std::string("printed gamma02 expansion ") + ref.gamma02 + " disagrees");
        }
    }
    return out;
}

} // namespace hardy
