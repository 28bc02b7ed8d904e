#include "domtri/types.hpp"

namespace domtri {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
        case ErrorCode::EulerViolation: return "EulerViolation";
        case ErrorCode::OuterDartMissing: return "OuterDartMissing";
        case ErrorCode::MultiEdgeOrLoop: return "MultiEdgeOrLoop";
        case ErrorCode::VertexNotPresent: return "VertexNotPresent";
        case ErrorCode::EmbeddingAmbiguity: return "EmbeddingAmbiguity";
        case ErrorCode::NotABlock: return "NotABlock";
        case ErrorCode::NotWnt: return "NotWnt";
        case ErrorCode::NotNearTriangulation: return "NotNearTriangulation";
        case ErrorCode::NotTriangulation: return "NotTriangulation";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::StaleStep: return "StaleStep";
        case ErrorCode::NoCenterFound: return "NoCenterFound";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::UnknownFixture: return "UnknownFixture";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::LemmaViolation: return "LemmaViolation";
        case ErrorCode::ColoringFailed: return "ColoringFailed";
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::NoDominatorFound: return "NoDominatorFound";
    }
    return "Unknown";
}

bool is_defect(ErrorCode code) {
    switch (code) {
        case ErrorCode::LemmaViolation:
        case ErrorCode::ColoringFailed:
        case ErrorCode::BoundViolation:
        case ErrorCode::NoDominatorFound:
            return true;
        default:
            return false;
    }
}

}  // namespace domtri
