#include "wordrep/report.hpp"

namespace wordrep {

nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["construction"] = r.construction;
    auto letters = nlohmann::ordered_json::array();
    for (Letter c : r.word)
        letters.push_back(c.name());
    j["word"] = std::move(letters);
    j["achieved_length"] = r.achieved_length;
    j["bound_value"] = r.bound_value;
    j["bound_holds"] = r.bound_holds;
    j["verified_represents"] = r.verified_represents;
    j["factors"] = {{"g_vertices", r.g_vertices},
                    {"h_vertices", r.h_vertices},
                    {"wg_length", r.wg_length},
                    {"wh_length", r.wh_length}};
    if (r.root)
        j["root"] = *r.root;
    return j;
}

}  // namespace wordrep
