#pragma once

#include <array>

namespace atfdwt::testing {

struct MsePsnr {
  const char* image;
  double mse;
  double psnr;
};

// Reference (MSE, PSNR dB) pairs for 512x512 covers. The first block comes
// from this embedding scheme, the second from a DFT-based one.
inline constexpr std::array<MsePsnr, 20> kReferencePairs{{
    {"Mona Lisa", 3.293662, 42.954014},
    {"Lena", 3.885129, 42.236749},
    {"Baboon", 3.188728, 43.094628},
    {"Tiffany", 3.999738, 42.110488},
    {"Airplane", 4.109852, 41.992542},
    {"Peppers", 3.886759, 42.234927},
    {"Couple", 4.343258, 41.752647},
    {"Sailboat", 3.580195, 42.591737},
    {"Woodland Hill", 3.255777, 43.004257},
    {"Oakland", 3.398177, 42.818344},
    {"Mona Lisa (baseline)", 4.498556, 41.600073},
    {"Lena (baseline)", 4.490079, 41.608264},
    {"Baboon (baseline)", 4.116379, 41.985650},
    {"Tiffany (baseline)", 5.392581, 40.812837},
    {"Airplane (baseline)", 4.907283, 41.222393},
    {"Peppers (baseline)", 4.486188, 41.612029},
    {"Couple (baseline)", 5.207868, 40.964204},
    {"Sailboat (baseline)", 4.412153, 41.684298},
    {"Woodland Hill (baseline)", 4.295761, 41.800402},
    {"Oakland (baseline)", 4.382144, 41.713938},
}};

// Average rows: the mean PSNR of each method's ten rows.
inline constexpr double kAveragePsnr = 42.479033;
inline constexpr double kAveragePsnrBaseline = 41.500409;

}  // namespace atfdwt::testing
