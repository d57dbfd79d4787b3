#include "tapecalc/fn_table.hpp"

#include <sstream>

namespace tapecalc {

std::vector<FnTable> enumerate_tables(std::size_t n, std::size_t m) {
    FnTable::check_width(n);
    FnTable::check_width(m);
    const std::size_t inputs  = std::size_t{1} << n;
    const std::size_t outputs = std::size_t{1} << m;
    double            count   = 1;
    for (std::size_t i = 0; i < inputs; ++i) {
        count *= static_cast<double>(outputs);
        if (count > 1u << 20)
            throw UnsupportedError("enumerate_tables: hom-set too large");
    }
    std::vector<FnTable>       all;
    std::vector<std::uint64_t> t(inputs, 0);
    while (true) {
        all.emplace_back(n, m, t);
        std::size_t i = 0;
        for (; i < inputs; ++i) {
            if (++t[i] < outputs)
                break;
            t[i] = 0;
        }
        if (i == inputs)
            break;
    }
    return all;
}

std::string bits_string(std::uint64_t bits, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if (bits >> i & 1)
            s[i] = '1';
    return s;
}

std::uint64_t parse_bits(const std::string& s) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            bits |= std::uint64_t{1} << i;
        else if (s[i] != '0')
            throw Error("parse_bits: bad character in '" + s + "'");
    }
    return bits;
}

std::ostream& operator<<(std::ostream& os, const FnTable& t) {
    os << "[" << t.n << "->" << t.m << ":";
    for (std::size_t i = 0; i < t.table.size(); ++i)
        os << (i ? "," : "") << bits_string(t.table[i], t.m);
    return os << "]";
}

std::string Set2Base::object_str(Object n) {
    if (n == 0)
        return "1";
    return std::string(n, 'A');
}

std::string Set2Base::arrow_str(const Arrow& f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

} // namespace tapecalc
