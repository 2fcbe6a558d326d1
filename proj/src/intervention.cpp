#include "mgcs/intervention.hpp"

#include "mgcs/error.hpp"

#include <string>

namespace mgcs {

namespace {

InterventionDecision repair_decision(const UsagePath& path, Grade input,
                                     InterventionClass cls, Grade resulting,
                                     int target_offset, std::string action) {
    InterventionDecision d;
    d.path = path;
    d.input_grade = input;
    d.intervention_class = cls;
    d.resulting_grade = resulting;
    d.target_offset = target_offset;
    d.action = std::move(action);
    return d;
}

InterventionDecision recycle_decision(const UsagePath& path, Grade input) {
    InterventionDecision d;
    d.path = path;
    d.input_grade = input;
    d.intervention_class = InterventionClass::Recyclable;
    d.resulting_grade = std::nullopt; // material level, no component grade
    d.target_offset = 0;
    d.action = "demolish and recycle at the material level";
    return d;
}

void require_offset(int offset, const char* what) {
    if (offset != 1 && offset != 2) {
        throw ComputeError(std::string(what) + " offset must be 1 or 2, got " +
                           std::to_string(offset));
    }
}

} // namespace

std::string_view class_name(InterventionClass c) {
    switch (c) {
    case InterventionClass::Reusable:
        return "Reusable";
    case InterventionClass::MinorRepairRefurbishment:
        return "MinorRepairRefurbishment";
    case InterventionClass::GeneralMaintenance:
        return "GeneralMaintenance";
    case InterventionClass::MajorRepairRefurbishment:
        return "MajorRepairRefurbishment";
    case InterventionClass::Recyclable:
        return "Recyclable";
    }
    return "Reusable";
}

std::string_view path_kind_name(PathKind kind) {
    switch (kind) {
    case PathKind::Reuse:
        return "reuse";
    case PathKind::Upcycle:
        return "upcycle";
    case PathKind::Downcycle:
        return "downcycle";
    }
    return "reuse";
}

PathKind parse_path_kind(std::string_view text) {
    if (text == "reuse") return PathKind::Reuse;
    if (text == "upcycle") return PathKind::Upcycle;
    if (text == "downcycle") return PathKind::Downcycle;
    throw ParseError("unknown usage path '" + std::string(text) +
                     "' (expected reuse, upcycle, or downcycle)");
}

UsagePath UsagePath::upcycle(int offset) {
    UsagePath path{PathKind::Upcycle, offset};
    path.validate();
    return path;
}

UsagePath UsagePath::downcycle(int offset) {
    UsagePath path{PathKind::Downcycle, offset};
    path.validate();
    return path;
}

void UsagePath::validate() const {
    if (kind == PathKind::Reuse) {
        if (offset != 0) {
            throw ComputeError("reuse path forces offset 0, got " +
                               std::to_string(offset));
        }
        return;
    }
    require_offset(offset, kind == PathKind::Upcycle ? "upcycle" : "downcycle");
}

std::vector<InterventionDecision> reuse_decisions(Grade grade) {
    const UsagePath path = UsagePath::reuse();
    switch (grade) {
    case Grade::A:
        return {repair_decision(path, grade, InterventionClass::Reusable,
                                Grade::A, 0, "label and package")};
    case Grade::B:
        return {repair_decision(path, grade,
                                InterventionClass::MinorRepairRefurbishment,
                                Grade::A, 0,
                                "minor repair and refurbishment to grade A")};
    case Grade::C:
        return {repair_decision(path, grade, InterventionClass::GeneralMaintenance,
                                Grade::A, 0, "general maintenance to grade A")};
    case Grade::D:
        return {repair_decision(path, grade,
                                InterventionClass::MajorRepairRefurbishment,
                                Grade::A, 0,
                                "major repair and refurbishment to grade A")};
    case Grade::E:
        return {recycle_decision(path, grade)};
    }
    return {};
}

std::vector<InterventionDecision> upcycle_decisions(Grade grade, int offset) {
    require_offset(offset, "upcycle");
    const UsagePath path{PathKind::Upcycle, offset};
    switch (grade) {
    case Grade::A:
        return {repair_decision(path, grade, InterventionClass::Reusable,
                                Grade::A, -offset,
                                "cutting for repurpose at the upper usage")};
    case Grade::B:
        return {repair_decision(path, grade,
                                InterventionClass::MinorRepairRefurbishment,
                                Grade::B, -offset,
                                "minor repair and refurbishment")};
    case Grade::C:
        return {repair_decision(path, grade, InterventionClass::GeneralMaintenance,
                                Grade::C, -offset, "general maintenance")};
    case Grade::D:
        // D cannot climb usage levels; it is restored to A where it is.
        return {repair_decision(path, grade,
                                InterventionClass::MajorRepairRefurbishment,
                                Grade::A, 0,
                                "major repair and refurbishment at the current "
                                "usage")};
    case Grade::E:
        return {recycle_decision(path, grade)};
    }
    return {};
}

std::vector<InterventionDecision> downcycle_decisions(Grade grade, int offset) {
    require_offset(offset, "downcycle");
    const UsagePath path{PathKind::Downcycle, offset};
    switch (grade) {
    case Grade::A:
        return {repair_decision(path, grade,
                                InterventionClass::MinorRepairRefurbishment,
                                Grade::A, offset, "minor repurpose (re-paint)")};
    case Grade::B:
        return {repair_decision(path, grade,
                                InterventionClass::MinorRepairRefurbishment,
                                Grade::A, offset,
                                "minor repair and refurbishment to grade A"),
                repair_decision(path, grade,
                                InterventionClass::MinorRepairRefurbishment,
                                Grade::B, offset,
                                "minor repair and refurbishment to grade B")};
    case Grade::C:
        return {repair_decision(path, grade, InterventionClass::GeneralMaintenance,
                                Grade::A, offset, "general maintenance to grade A"),
                repair_decision(path, grade, InterventionClass::GeneralMaintenance,
                                Grade::B, offset,
                                "general maintenance to grade B")};
    case Grade::D:
        return {repair_decision(path, grade,
                                InterventionClass::MajorRepairRefurbishment,
                                Grade::A, offset,
                                "major repair and refurbishment to grade A"),
                repair_decision(path, grade,
                                InterventionClass::MajorRepairRefurbishment,
                                Grade::B, offset,
                                "major repair and refurbishment to grade B")};
    case Grade::E:
        return {repair_decision(path, grade,
                                InterventionClass::MajorRepairRefurbishment,
                                Grade::B, offset,
                                "major repair and refurbishment to grade B"),
                repair_decision(path, grade,
                                InterventionClass::MajorRepairRefurbishment,
                                Grade::C, offset,
                                "major repair and refurbishment to grade C"),
                recycle_decision(path, grade)};
    }
    return {};
}

std::vector<InterventionDecision> decide(Grade grade, const UsagePath& path) {
    path.validate();
    switch (path.kind) {
    case PathKind::Reuse:
        return reuse_decisions(grade);
    case PathKind::Upcycle:
        return upcycle_decisions(grade, path.offset);
    case PathKind::Downcycle:
        return downcycle_decisions(grade, path.offset);
    }
    return {};
}

} // namespace mgcs
