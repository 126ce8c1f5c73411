#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dapt/graph.hpp"

namespace dapt {

enum class Family { ce, sc, rg, pet03, custom };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// Provenance of a best-known objective value.
enum class Provenance { heuristic, proven };

struct BestKnown {
    Cost value = 0;
    Provenance provenance = Provenance::heuristic;
    std::string note;

    friend bool operator==(const BestKnown&, const BestKnown&) = default;
};

/// DAPT(G, d) plus identity metadata. Requires 2 <= d <= n (so n >= 2).
class Instance {
public:
    Instance(std::string id, GuestGraph graph, std::uint64_t d, Family family = Family::custom,
             std::optional<BestKnown> best_known = std::nullopt);

    const std::string& id() const noexcept { return id_; }
    const GuestGraph& graph() const noexcept { return graph_; }
    std::uint64_t degree() const noexcept { return d_; }
    Family family() const noexcept { return family_; }
    const std::optional<BestKnown>& best_known() const noexcept { return best_known_; }

private:
    std::string id_;
    GuestGraph graph_;
    std::uint64_t d_;
    Family family_;
    std::optional<BestKnown> best_known_;
};

} // namespace dapt
