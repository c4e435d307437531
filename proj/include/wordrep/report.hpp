// report.hpp -- record of one construction run and its length bound

#pragma once

#include <optional>
#include <string>

#include "wordrep/word.hpp"

#include <json.hpp>

namespace wordrep {

/// One construction run: the produced word, its length, the theoretical bound
/// instantiated with the supplied words' lengths, and the verification flags.
struct BoundReport {
    std::string construction;
    Word word;
    std::size_t achieved_length = 0;
    std::size_t bound_value = 0;
    bool bound_holds = false;
    bool verified_represents = false;

    std::size_t g_vertices = 0;
    std::size_t h_vertices = 0;
    std::size_t wg_length = 0;
    std::size_t wh_length = 0;

    std::optional<std::string> root;  // rooted constructions only
};

nlohmann::ordered_json to_json(const BoundReport& r);

}  // namespace wordrep
