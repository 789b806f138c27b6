#pragma once

#include <array>
#include <string>

#include "trisect/error.hpp"

namespace trisect {

enum class Color : int { R = 0, B = 1, G = 2 };

// Unordered pairs of colors, indexed in the fixed reporting order.
enum class ColorPair : int { RB = 0, BG = 1, GR = 2 };

constexpr std::array<Color, 3> all_colors{Color::R, Color::B, Color::G};
constexpr std::array<ColorPair, 3> all_pairs{ColorPair::RB, ColorPair::BG, ColorPair::GR};

inline const char* to_string(Color c) {
    switch (c) {
        case Color::R: return "r";
        case Color::B: return "b";
        case Color::G: return "g";
    }
    return "?";
}

inline const char* to_string(ColorPair p) {
    switch (p) {
        case ColorPair::RB: return "rb";
        case ColorPair::BG: return "bg";
        case ColorPair::GR: return "gr";
    }
    return "??";
}

inline Color parse_color(const std::string& s) {
    if (s == "r" || s == "R" || s == "red") return Color::R;
    if (s == "b" || s == "B" || s == "blue") return Color::B;
    if (s == "g" || s == "G" || s == "green") return Color::G;
    throw Error(Err::ParseError, "unknown color '" + s + "'");
}

// The two colors forming a pair, in reporting order.
inline std::array<Color, 2> colors_of(ColorPair p) {
    switch (p) {
        case ColorPair::RB: return {Color::R, Color::B};
        case ColorPair::BG: return {Color::B, Color::G};
        case ColorPair::GR: return {Color::G, Color::R};
    }
    return {Color::R, Color::B};
}

// The pair avoiding c (e.g. opposite(G) = RB).
inline ColorPair opposite(Color c) {
    switch (c) {
        case Color::G: return ColorPair::RB;
        case Color::R: return ColorPair::BG;
        case Color::B: return ColorPair::GR;
    }
    return ColorPair::RB;
}

// The color avoided by p.
inline Color third(ColorPair p) {
    switch (p) {
        case ColorPair::RB: return Color::G;
        case ColorPair::BG: return Color::R;
        case ColorPair::GR: return Color::B;
    }
    return Color::G;
}

// The two pairs containing c, in reporting order.
inline std::array<ColorPair, 2> pairs_containing(Color c) {
    switch (c) {
        case Color::R: return {ColorPair::RB, ColorPair::GR};
        case Color::B: return {ColorPair::RB, ColorPair::BG};
        case Color::G: return {ColorPair::BG, ColorPair::GR};
    }
    return {ColorPair::RB, ColorPair::GR};
}

inline bool contains(ColorPair p, Color c) { return third(p) != c; }

inline Color other_color(ColorPair p, Color c) {
    auto cs = colors_of(p);
    return cs[0] == c ? cs[1] : cs[0];
}

}  // namespace trisect
