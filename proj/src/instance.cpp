#include "dapt/instance.hpp"

#include <stdexcept>

namespace dapt {

std::string to_string(Family f) {
    switch (f) {
    case Family::ce: return "CE";
    case Family::sc: return "SC";
    case Family::rg: return "RG";
    case Family::pet03: return "Pet03";
    case Family::custom: return "custom";
    }
    return "custom";
}

Family family_from_string(const std::string& s) {
    if (s == "CE") return Family::ce;
    if (s == "SC") return Family::sc;
    if (s == "RG") return Family::rg;
    if (s == "Pet03") return Family::pet03;
    if (s == "custom") return Family::custom;
    throw std::invalid_argument("unknown family tag '" + s + "'");
}

Instance::Instance(std::string id, GuestGraph graph, std::uint64_t d, Family family,
                   std::optional<BestKnown> best_known)
    : id_(std::move(id)), graph_(std::move(graph)), d_(d), family_(family),
      best_known_(std::move(best_known)) {
    const auto n = graph_.num_vertices();
    if (n < 2) {
        throw std::domain_error("instances need at least 2 vertices");
    }
    if (d_ < 2 || d_ > n) {
        throw std::domain_error("instance requires 2 <= d <= n");
    }
}

} // namespace dapt
