#pragma once

#include <stdexcept>
#include <string>

namespace gmi {

enum class Group { Similarity, Affine, Rotation3D };

inline std::string to_string(Group g) {
    switch (g) {
        case Group::Similarity: return "similarity";
        case Group::Affine: return "affine";
        case Group::Rotation3D: return "rotation3d";
    }
    throw std::logic_error("bad group");
}

inline Group group_from_string(const std::string& s) {
    if (s == "similarity") return Group::Similarity;
    if (s == "affine") return Group::Affine;
    if (s == "rotation3d") return Group::Rotation3D;
    throw std::invalid_argument("unknown group: " + s);
}

}  // namespace gmi
