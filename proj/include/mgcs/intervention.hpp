#pragma once

#include "mgcs/grade.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mgcs {

// Circular-intervention tier. Numbers 1-5 map one-to-one onto the names.
enum class InterventionClass : int {
    Reusable = 1,
    MinorRepairRefurbishment = 2,
    GeneralMaintenance = 3,
    MajorRepairRefurbishment = 4,
    Recyclable = 5,
};

constexpr int class_number(InterventionClass c) noexcept {
    return static_cast<int>(c);
}

std::string_view class_name(InterventionClass c);

enum class PathKind {
    Reuse,
    Upcycle,
    Downcycle,
};

std::string_view path_kind_name(PathKind kind);
PathKind parse_path_kind(std::string_view text);

// Requested redeployment: same usage (Reuse, offset 0), a more demanding
// usage i-1/i-2 (Upcycle), or a less demanding usage i+1/i+2 (Downcycle).
struct UsagePath {
    PathKind kind = PathKind::Reuse;
    int offset = 0; // 0 for Reuse; 1 or 2 for Upcycle/Downcycle

    static UsagePath reuse() { return {PathKind::Reuse, 0}; }
    static UsagePath upcycle(int offset);
    static UsagePath downcycle(int offset);

    // Throws ComputeError when the offset is illegal for the kind.
    void validate() const;
};

// One feasible action for a graded component on a chosen path.
struct InterventionDecision {
    UsagePath path;
    Grade input_grade = Grade::A;
    InterventionClass intervention_class = InterventionClass::Reusable;
    // Grade after the intervention; empty for Class 5 (recycled to material,
    // no component grade remains).
    std::optional<Grade> resulting_grade;
    // Signed usage shift of the decision: negative toward more demanding
    // usages, positive toward less demanding ones, 0 for same-usage/recycle.
    int target_offset = 0;
    std::string action;
};

// Same-usage table: A->Class 1 ... E->Class 5, non-recycle results restore A.
std::vector<InterventionDecision> reuse_decisions(Grade grade);

// More-demanding usage (i-offset). Grade D stays at the current usage
// (Class 4 back to A); grade E can only be recycled.
std::vector<InterventionDecision> upcycle_decisions(Grade grade, int offset);

// Less-demanding usage (i+offset). Alternative resulting grades ("A or B")
// are emitted as separate decisions; grade E additionally keeps the
// recycle option.
std::vector<InterventionDecision> downcycle_decisions(Grade grade, int offset);

// Dispatch on the path kind. Non-empty for every grade and well-formed path.
std::vector<InterventionDecision> decide(Grade grade, const UsagePath& path);

} // namespace mgcs
