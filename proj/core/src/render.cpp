#include "gridsalvage/render.hpp"

#include <map>
#include <sstream>
#include <string>

namespace gridsalvage::render {

namespace {

const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#76b7b2", "#edc948",
    "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295", "#a0cbe8",
};
constexpr int kPaletteSize = 12;
constexpr int kCell = 18;

void require_drawable(const GridSpec& spec) {
    if (spec.dim() > 2) {
        throw InvalidInputError("render supports d <= 2 grids; hypercube damage draws as a matrix");
    }
}

// marks[id] = branch index for branch members, -1 for plain region members
std::map<std::uint64_t, int> collect_marks(const GridSpec& spec, const MinorModel* model,
                                           const SubgridRegion* region) {
    std::map<std::uint64_t, int> marks;
    if (model != nullptr) {
        if (model->host != spec) {
            throw InvalidInputError("certificate host grid does not match the damage grid");
        }
        for (std::size_t b = 0; b < model->branches.size(); ++b) {
            for (const Coord& h : model->branches[b].hosts) {
                marks[spec.encode(h)] = static_cast<int>(b);
            }
        }
    }
    if (region != nullptr) {
        require_region_in_grid(spec, *region);
        Coord v = region->origin;
        const int d = spec.dim();
        while (true) {
            marks.emplace(spec.encode(v), -1);
            int a = d - 1;
            while (a >= 0) {
                if (++v[static_cast<std::size_t>(a)] < region->origin[a] + region->side) break;
                v[static_cast<std::size_t>(a)] = region->origin[a];
                --a;
            }
            if (a < 0) break;
        }
    }
    return marks;
}

}  // namespace

std::string ascii_grid(const DamageSet& damage, const MinorModel* model,
                       const SubgridRegion* region) {
    const GridSpec& spec = damage.spec();
    require_drawable(spec);
    const auto marks = collect_marks(spec, model, region);

    const int rows = spec.dim() == 2 ? spec.side() : 1;
    const int cols = spec.side();
    std::string out;
    out.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols + 1));
    Coord v(static_cast<std::size_t>(spec.dim()));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (spec.dim() == 2) {
                v[0] = r;
                v[1] = c;
            } else {
                v[0] = c;
            }
            const std::uint64_t id = spec.encode(v);
            char ch = '.';
            if (damage.contains_id(id)) {
                ch = 'X';
            } else if (marks.count(id)) {
                ch = '#';
            }
            out += ch;
        }
        out += '\n';
    }
    return out;
}

std::string svg_grid(const DamageSet& damage, const MinorModel* model,
                     const SubgridRegion* region) {
    const GridSpec& spec = damage.spec();
    require_drawable(spec);
    const auto marks = collect_marks(spec, model, region);

    const int rows = spec.dim() == 2 ? spec.side() : 1;
    const int cols = spec.side();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * kCell << "\" height=\""
        << rows * kCell << "\" viewBox=\"0 0 " << cols * kCell << " " << rows * kCell << "\">\n";
    out << "<rect width=\"" << cols * kCell << "\" height=\"" << rows * kCell
        << "\" fill=\"#ffffff\"/>\n";

    Coord v(static_cast<std::size_t>(spec.dim()));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (spec.dim() == 2) {
                v[0] = r;
                v[1] = c;
            } else {
                v[0] = c;
            }
            const std::uint64_t id = spec.encode(v);
            const int x = c * kCell;
            const int y = r * kCell;
            if (damage.contains_id(id)) {
                out << "<line x1=\"" << x + 3 << "\" y1=\"" << y + 3 << "\" x2=\"" << x + kCell - 3
                    << "\" y2=\"" << y + kCell - 3 << "\" stroke=\"#c62828\" stroke-width=\"2\"/>\n";
                out << "<line x1=\"" << x + kCell - 3 << "\" y1=\"" << y + 3 << "\" x2=\"" << x + 3
                    << "\" y2=\"" << y + kCell - 3 << "\" stroke=\"#c62828\" stroke-width=\"2\"/>\n";
                continue;
            }
            auto it = marks.find(id);
            const char* fill = "#e0e0e0";
            if (it != marks.end()) {
                fill = it->second < 0 ? "#9e9e9e" : kPalette[it->second % kPaletteSize];
            }
            out << "<rect x=\"" << x + 2 << "\" y=\"" << y + 2 << "\" width=\"" << kCell - 4
                << "\" height=\"" << kCell - 4 << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string ascii_hypercube(const hypercube::HypercubeDamage& damage) {
    std::string out;
    for (std::uint64_t mask : damage.masks()) {
        out += damage.bit_string(mask);
        out += '\n';
    }
    return out;
}

std::string svg_hypercube(const hypercube::HypercubeDamage& damage) {
    const int rows = static_cast<int>(damage.size());
    const int cols = damage.dim();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * kCell << "\" height=\""
        << rows * kCell << "\" viewBox=\"0 0 " << cols * kCell << " " << rows * kCell << "\">\n";
    out << "<rect width=\"" << cols * kCell << "\" height=\"" << rows * kCell
        << "\" fill=\"#ffffff\"/>\n";
    int r = 0;
    for (std::uint64_t mask : damage.masks()) {
        for (int i = 0; i < cols; ++i) {
            const bool one = (mask >> i) & 1;
            out << "<rect x=\"" << i * kCell + 2 << "\" y=\"" << r * kCell + 2 << "\" width=\""
                << kCell - 4 << "\" height=\"" << kCell - 4 << "\" fill=\""
                << (one ? "#37474f" : "#eceff1") << "\"/>\n";
        }
        ++r;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gridsalvage::render
