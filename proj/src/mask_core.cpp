#include "rugosity/mask_core.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "rugosity/parallel.hpp"

namespace rugosity {

std::size_t VoxelMask::foreground_count() const {
    std::size_t n = 0;
    for (std::uint8_t b : data) n += b;
    return n;
}

std::size_t SurfaceMask::voxel_count_on_surface() const {
    std::size_t n = 0;
    for (std::uint8_t b : data) n += b;
    return n;
}

void validate_mask(const VoxelMask& mask) {
    validate_dims(mask.dims);
    if (mask.data.size() != mask.dims.voxel_count()) {
        throw ValueError("mask data length does not match dims");
    }
    for (std::uint8_t b : mask.data) {
        if (b > 1) throw ValueError("mask voxels must be 0 or 1");
    }
}

namespace {

bool parse_positive_int(const std::string& tok, int& out) {
    if (tok.empty() || tok.size() > 9) return false;
    long v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        v = v * 10 + (c - '0');
    }
    if (v < 1) return false;
    out = static_cast<int>(v);
    return true;
}

}  // namespace

VoxelMask parse_mvox(const std::string& bytes) {
    const std::size_t nl = bytes.find('\n');
    if (nl == std::string::npos) throw FormatError("MVOX: missing header line");
    const std::string header = bytes.substr(0, nl);

    std::vector<std::string> tok;
    std::istringstream iss(header);
    for (std::string t; iss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] != "MVOX") throw FormatError("MVOX: bad magic");
    if (tok.size() < 2) throw FormatError("MVOX: missing ndim");

    int ndim = 0;
    if (!parse_positive_int(tok[1], ndim) || (ndim != 2 && ndim != 3)) {
        throw FormatError("MVOX: ndim must be 2 or 3");
    }
    if (tok.size() != static_cast<std::size_t>(2 + ndim)) {
        throw FormatError("MVOX: header token count does not match ndim");
    }

    GridDims dims;
    dims.ndim = ndim;
    dims.extent = {1, 1, 1};
    for (int a = 0; a < ndim; ++a) {
        if (!parse_positive_int(tok[2 + a], dims.extent[a])) {
            throw FormatError("MVOX: bad extent '" + tok[2 + a] + "'");
        }
    }
    try {
        validate_dims(dims);
    } catch (const ValueError& e) {
        throw FormatError(std::string("MVOX: ") + e.what());
    }

    const std::size_t payload = bytes.size() - nl - 1;
    if (payload != dims.voxel_count()) {
        throw FormatError("MVOX: payload length " + std::to_string(payload) + " does not match dims");
    }

    VoxelMask mask;
    mask.dims = dims;
    mask.data.resize(payload);
    for (std::size_t i = 0; i < payload; ++i) {
        const auto b = static_cast<std::uint8_t>(bytes[nl + 1 + i]);
        if (b > 1) throw ValueError("MVOX: payload byte not in {0,1}");
        mask.data[i] = b;
    }
    return mask;
}

std::string serialize_mvox(const VoxelMask& mask) {
    validate_mask(mask);
    std::string out = "MVOX " + std::to_string(mask.dims.ndim);
    for (int a = 0; a < mask.dims.ndim; ++a) {
        out += ' ';
        out += std::to_string(mask.dims.extent[a]);
    }
    out += '\n';
    out.append(reinterpret_cast<const char*>(mask.data.data()), mask.data.size());
    return out;
}

VoxelMask load_mvox(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return parse_mvox(buf.str());
}

void save_mvox(const std::string& path, const VoxelMask& mask) {
    const std::string bytes = serialize_mvox(mask);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failure on '" + path + "'");
}

SurfaceMask extract_surface(const VoxelMask& mask) {
    const GridDims& dims = mask.dims;
    SurfaceMask surf;
    surf.dims = dims;
    surf.data.assign(dims.voxel_count(), 0);

    const auto offs = face_offsets(dims.ndim);
    const int e1 = dims.extent[1];
    const int e2 = dims.extent[2];
    par::for_blocks(static_cast<std::size_t>(dims.extent[0]), 8, [&](std::size_t lo, std::size_t hi) {
        for (int i = static_cast<int>(lo); i < static_cast<int>(hi); ++i) {
            for (int j = 0; j < e1; ++j) {
                for (int k = 0; k < e2; ++k) {
                    const std::size_t idx = dims.index(i, j, k);
                    if (!mask.data[idx]) continue;
                    for (const Voxel& o : offs) {
                        const int ni = i + o[0], nj = j + o[1], nk = k + o[2];
                        if (!dims.in_bounds(ni, nj, nk) || !mask.data[dims.index(ni, nj, nk)]) {
                            surf.data[idx] = 1;
                            break;
                        }
                    }
                }
            }
        }
    });
    return surf;
}

Centroid centroid(const SurfaceMask& surface) {
    std::int64_t sum[3] = {0, 0, 0};
    std::int64_t n = 0;
    const GridDims& dims = surface.dims;
    for (int i = 0; i < dims.extent[0]; ++i) {
        for (int j = 0; j < dims.extent[1]; ++j) {
            for (int k = 0; k < dims.extent[2]; ++k) {
                if (!surface.data[dims.index(i, j, k)]) continue;
                sum[0] += i;
                sum[1] += j;
                sum[2] += k;
                ++n;
            }
        }
    }
    if (n == 0) throw EmptySurfaceError("centroid of an empty surface");
    Centroid c;
    c.ndim = dims.ndim;
    for (int a = 0; a < 3; ++a) {
        c.coord[a] = static_cast<double>(sum[a]) / static_cast<double>(n);
    }
    return c;
}

double distance_to(const Voxel& v, const Centroid& c0) {
    double s = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double d = static_cast<double>(v[a]) - c0.coord[a];
        s += d * d;
    }
    return std::sqrt(s);
}

DistanceField distance_field(const SurfaceMask& surface, const Centroid& c0) {
    const GridDims& dims = surface.dims;
    DistanceField zm;
    zm.dims = dims;
    zm.data.assign(dims.voxel_count(), 0.0);

    const int e1 = dims.extent[1];
    const int e2 = dims.extent[2];
    par::for_blocks(static_cast<std::size_t>(dims.extent[0]), 8, [&](std::size_t lo, std::size_t hi) {
        for (int i = static_cast<int>(lo); i < static_cast<int>(hi); ++i) {
            for (int j = 0; j < e1; ++j) {
                for (int k = 0; k < e2; ++k) {
                    const std::size_t idx = dims.index(i, j, k);
                    if (surface.data[idx]) {
                        zm.data[idx] = distance_to(Voxel{i, j, k}, c0);
                    }
                }
            }
        }
    });
    return zm;
}

std::vector<Voxel> surface_voxels(const SurfaceMask& surface) {
    std::vector<Voxel> out;
    const GridDims& dims = surface.dims;
    for (int i = 0; i < dims.extent[0]; ++i) {
        for (int j = 0; j < dims.extent[1]; ++j) {
            for (int k = 0; k < dims.extent[2]; ++k) {
                if (surface.data[dims.index(i, j, k)]) out.push_back(Voxel{i, j, k});
            }
        }
    }
    return out;
}

}  // namespace rugosity
