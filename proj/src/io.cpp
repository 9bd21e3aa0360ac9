#include "qphase/io.hpp"

#include <cstdio>
#include <sstream>

namespace qphase {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_state_dump(std::ostream& out, const RegisterState& s) {
    for (std::uint64_t k = 0; k < s.dim(); ++k) {
        const Amp a = s.amps()[k];
        out << k << '\t' << format_g17(a.real()) << '\t' << format_g17(a.imag()) << '\n';
    }
}

std::string state_dump_string(const RegisterState& s) {
    std::ostringstream oss;
    write_state_dump(oss, s);
    return oss.str();
}

} // namespace qphase
