#pragma once

#include "banded/surface.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace banded {

/// Malformed input file. line and column are 1-based, 0 when the problem is
/// not tied to a position (a missing field, a bad polygon).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line;
  std::size_t column;
};

struct InstanceDocument {
  SliceInstance instance;
  std::string name;
  std::string source;  // free-form provenance note
};

/// JSON: {"n": 3, "P": [["0","0"], ...], "Pprime": [...], "name": ..., "source": ...}.
/// Coordinates are decimal or p/q strings (integers may also be bare numbers).
InstanceDocument parse_instance(const std::string& text);
InstanceDocument load_instance_document(const std::filesystem::path& path);
SliceInstance load_instance(const std::filesystem::path& path);

std::string format_instance(const InstanceDocument& doc);
void save_instance(const std::filesystem::path& path, const InstanceDocument& doc);
void save_instance(const std::filesystem::path& path, const SliceInstance& inst);

enum class MeshFormat { Off, Obj };

/// Doubles for viewers plus "# exact <i> <x> <y> <z>" comment lines carrying
/// the rational coordinates; OBJ indices are 1-based.
std::string format_mesh(const BandedSurface& s, MeshFormat format);
void export_mesh(const BandedSurface& s, MeshFormat format, const std::filesystem::path& path);

/// Reads an OFF triangle mesh. Exact comment lines win over the doubles when
/// present for every vertex. Bands and paths are left empty.
BandedSurface parse_off(const std::string& text);
BandedSurface import_off(const std::filesystem::path& path);

/// {"n": n, "bands": [[face, ...], ...], "paths": [[vertex, ...], ...]}.
std::string format_bands(const BandedSurface& s);
void save_bands(const std::filesystem::path& path, const BandedSurface& s);

/// Fills bands and paths from a band file and relabels path ends as the
/// original vertices, everything else as Steiner vertices.
void attach_bands(BandedSurface& s, const std::string& band_text);
void load_bands(const std::filesystem::path& path, BandedSurface& s);

/// Closed polyline as OBJ: one vertex per section corner, one "l" record
/// returning to the first vertex.
std::string format_section(const CrossSection& section);
void export_section(const CrossSection& section, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace banded
