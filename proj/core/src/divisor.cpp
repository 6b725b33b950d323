#include "frobstrat/divisor.hpp"

#include "frobstrat/checked.hpp"
#include "frobstrat/errors.hpp"

namespace frobstrat {

FormalDivisorExpr::FormalDivisorExpr(std::int64_t det_structure_power, Divisor pushed_points)
    : det_power_(det_structure_power), points_(std::move(pushed_points)) {
    if (det_power_ < 0)
        throw BadConstraints("determinant power must be >= 0, got " + std::to_string(det_power_));
    std::erase_if(points_, [](const auto& entry) { return entry.second == 0; });
}

FormalDivisorExpr pushforward_determinant(std::int64_t rank, const Divisor& det_divisor,
                                          const PointMap& f) {
    if (rank < 1) throw InvalidRank("rank must be >= 1, got " + std::to_string(rank));
    Divisor pushed;
    for (const auto& [point, multiplicity] : det_divisor) {
        if (multiplicity == 0) continue;
        const auto image = f.find(point);
        if (image == f.end()) throw UnmappedPoint("no image for point '" + point + "'");
        auto [slot, inserted] = pushed.try_emplace(image->second, 0);
        slot->second = checked_add(slot->second, multiplicity);
    }
    return FormalDivisorExpr(rank, std::move(pushed));
}

}  // namespace frobstrat
