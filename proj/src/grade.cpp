#include "mgcs/grade.hpp"

#include "mgcs/error.hpp"

#include <cctype>

namespace mgcs {

std::string format_grade(Grade g) { return std::string(1, grade_letter(g)); }

Grade parse_grade(std::string_view text) {
    if (text.size() == 1) {
        const char c = static_cast<char>(
            std::toupper(static_cast<unsigned char>(text[0])));
        if (c >= 'A' && c <= 'E') {
            return static_cast<Grade>(c - 'A');
        }
    }
    throw ParseError("unknown grade label '" + std::string(text) +
                     "' (expected one of A, B, C, D, E)");
}

} // namespace mgcs
