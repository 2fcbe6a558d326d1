#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace mgcs {

// Five-level condition grade, A (best) to E (worst). The scale is closed:
// rank 0..4 orders grades from best to worst.
enum class Grade : int {
    A = 0,
    B = 1,
    C = 2,
    D = 3,
    E = 4,
};

inline constexpr std::array<Grade, 5> kGrades{Grade::A, Grade::B, Grade::C,
                                              Grade::D, Grade::E};
inline constexpr std::size_t kGradeCount = kGrades.size();

constexpr int grade_rank(Grade g) noexcept { return static_cast<int>(g); }

constexpr char grade_letter(Grade g) noexcept {
    return static_cast<char>('A' + grade_rank(g));
}

std::string format_grade(Grade g);

// Case-insensitive parse of a single letter A-E. Throws ParseError otherwise.
Grade parse_grade(std::string_view text);

enum class GradeOrdering {
    Better, // first argument is the better grade (lower rank)
    Equal,
    Worse,
};

// Ordering of `a` relative to `b` under the rank order A=0 .. E=4.
constexpr GradeOrdering compare_grades(Grade a, Grade b) noexcept {
    if (grade_rank(a) < grade_rank(b)) return GradeOrdering::Better;
    if (grade_rank(a) > grade_rank(b)) return GradeOrdering::Worse;
    return GradeOrdering::Equal;
}

constexpr Grade worse_of(Grade a, Grade b) noexcept {
    return grade_rank(a) >= grade_rank(b) ? a : b;
}

constexpr Grade better_of(Grade a, Grade b) noexcept {
    return grade_rank(a) <= grade_rank(b) ? a : b;
}

// Fixed-size value map keyed by Grade, iterated in rank order A..E.
template <typename T>
struct GradeMap {
    std::array<T, kGradeCount> values{};

    T& operator[](Grade g) { return values[static_cast<std::size_t>(g)]; }
    const T& operator[](Grade g) const {
        return values[static_cast<std::size_t>(g)];
    }

    bool operator==(const GradeMap&) const = default;
};

} // namespace mgcs
