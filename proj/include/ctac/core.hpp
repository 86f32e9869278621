#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctac/geometry.hpp"
#include "ctac/markers.hpp"
#include "ctac/violation.hpp"

namespace ctac {

enum class Mechanism { IMM, MDM, IMM_MDM, MDM_MFM, IMM_MFM };

enum class Variant { C_Tac, C_Sight, C_SighTac, Vi_C_Tac, Vi_C_Sight };

std::string to_string(Mechanism m);
std::string to_string(Variant v);
std::optional<Mechanism> mechanism_from_string(const std::string& s);
// Accepts both "c-tac" style and "C_Tac" style spellings.
std::optional<Variant> variant_from_string(const std::string& s);

struct ElastomerSpec {
    double thickness_mm = 4.0;
    double clarity = 0.9;             // [0,1] transmittance factor
    double stiffness_shore_a = 30.0;  // Agilus30 baseline
    double refractive_ratio = 1.4;    // n_elastomer / n_air
    bool operator==(const ElastomerSpec&) const = default;
};

struct SkinSpec {
    double thickness_mm = 0.5;
    double transparency = 0.0;  // 0 = opaque black skin, 1 = fully clear
    Rgb color;
    bool operator==(const SkinSpec&) const = default;
};

enum class IlluminationMode { white, rgb };

struct IlluminationSpec {
    IlluminationMode mode = IlluminationMode::white;
    Rgb base_intensity{0.8, 0.8, 0.8};
    bool operator==(const IlluminationSpec&) const = default;
};

struct CameraSpec {
    int px_w = 480;
    int px_h = 480;
    double mm_per_px = 0.1;
    double standoff_mm = 20.0;  // lens-to-surface distance, drives frame-marker foreshortening
    bool operator==(const CameraSpec&) const = default;
};

// Layered-intensity parameters for the C-Sight style stacked structure.
struct ImmParams {
    double alpha = 0.2;  // darkening gain, intensity per mm of indentation
    bool operator==(const ImmParams&) const = default;
};

// Brightness response of the clear-elastomer internal-reflection design.
struct TirParams {
    double beta = 1.2;               // gain on |grad depth|
    double depth_threshold_mm = 0.02;
    double contact_lift = 0.06;      // uniform brightness lift inside contact
    bool operator==(const TirParams&) const = default;
};

// Deformation-model coefficients (smoothed-gradient surface model).
struct MechanicsParams {
    double sigma_mm = 2.0;      // Gaussian smoothing width
    double kappa_mm = 0.3;      // lateral compliance at Shore 30A
    double layer_lambda = 0.6;  // per-layer depth attenuation, (0,1]
    double stretch_k = 0.2;     // flexible-marker radius gain per mm of depth
    bool operator==(const MechanicsParams&) const = default;
};

struct SensingArea {
    double width_mm = 0.0;
    double height_mm = 0.0;
    bool operator==(const SensingArea&) const = default;
    Rect rect() const { return {0.0, 0.0, width_mm, height_mm}; }
};

struct SensorConfig {
    std::string name;
    Mechanism mechanism = Mechanism::MDM;
    SensingArea sensing_area;
    ElastomerSpec elastomer;
    SkinSpec skin;
    std::optional<MarkerLayout> markers;
    IlluminationSpec illumination;
    CameraSpec camera;
    std::optional<ImmParams> imm;
    std::optional<TirParams> tir;
    MechanicsParams mech;
    bool operator==(const SensorConfig&) const = default;
};

SensorConfig preset(Variant variant);

std::vector<Violation> validate_config(const SensorConfig& cfg);

}  // namespace ctac
