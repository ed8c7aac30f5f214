#include "radgps/tables.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "radgps/format.hpp"
#include "radgps/observables.hpp"
#include "radgps/operator.hpp"
#include "radgps/potentials.hpp"

namespace radgps {

namespace {

constexpr double NN = std::numeric_limits<double>::quiet_NaN();

// Potential descriptors shared by many cells.
constexpr const char* Q = "quartic";
constexpr const char* O1 = "oscillator a=0.5 b=-5.625 c=1.7578125";
constexpr const char* O2 = "oscillator a=0.5 b=-3.5 c=24.5";
constexpr const char* O3 = "oscillator a=0.5 b=0.02041 c=0.09";
constexpr const char* O4 = "oscillator a=0.5 b=0.5 c=0.5";
constexpr const char* O5 = "oscillator a=0.5 b=22.5 c=112.5";
constexpr const char* O6 = "oscillator a=0.5 b=0.5 c=0.4";
constexpr const char* C1 = "coulomb Z=1 g=0 lambda=0.1";
constexpr const char* C2 = "coulomb Z=1 g=0 lambda=10";
constexpr const char* C3 = "coulomb Z=1 g=0 lambda=1000";
constexpr const char* C4 = "coulomb Z=8 g=1 lambda=1/32";
constexpr const char* C5 = "coulomb Z=10 g=5 lambda=1";
constexpr const char* C6 = "coulomb Z=12 g=1 lambda=1/32";
constexpr const char* C7 = "coulomb Z=0.5 g=0.5 lambda=0.5";

// Row order: {table, potential, l, state, moment_power,
//             printed, reference, paren, exact, bound_lo, bound_hi}.
const std::vector<RefEntry>& data() {
    static const std::vector<RefEntry> rows = {
        // ---- Table 1: pure quartic oscillator, band v = 2*state + l = 48/49.
        // The 13-digit targets are asymptotic-shooting literature values;
        // the printed column keeps 12 significant figures of the same states.
        {1, Q, 0, 24, 0, "250.183358697", 250.1833586971, nullptr, NN, NN, NN},
        {1, Q, 1, 24, 0, "256.916238928", 256.9162389286, nullptr, NN, NN, NN},
        {1, Q, 2, 23, 0, "250.096690608", 250.0966906080, nullptr, NN, NN, NN},
        {1, Q, 3, 23, 0, "256.773728914", 256.7737289146, nullptr, NN, NN, NN},
        {1, Q, 4, 22, 0, "249.894552064", 249.8945520647, nullptr, NN, NN, NN},
        {1, Q, 5, 22, 0, "256.517359165", 256.5173591656, nullptr, NN, NN, NN},
        {1, Q, 6, 21, 0, "249.577151099", 249.5771510991, nullptr, NN, NN, NN},
        {1, Q, 7, 21, 0, "256.147382583", 256.1473825836, nullptr, NN, NN, NN},
        {1, Q, 8, 20, 0, "249.144812457", 249.1448124575, nullptr, NN, NN, NN},
        {1, Q, 9, 20, 0, "255.664161642", 255.6641616427, nullptr, NN, NN, NN},

        // ---- Table 2: harmonic core with inverse-quartic + inverse-sextic
        // terms, a = 0.5. Parenthesized figures: closed forms from the
        // conditionally-solvable parameter relations (marked by an `exact`
        // value) or independent numerical integration.
        {2, O1, 0, 0, 0, "-0.999999999999", -0.999999999999, "-1.0", -1.0, NN, NN}, // closed form
        {2, O1, 0, 1, 0, "2.99999999999", 2.99999999999, "3.0", 3.0, NN, NN},       // closed form
        {2, O1, 0, 2, 0, "5.48535332842", 5.48535332842, "5.485353", NN, NN, NN},   // direct numerical integration
        {2, O1, 0, 3, 0, "7.79200908589", 7.79200908589, nullptr, NN, NN, NN},
        {2, O1, 0, 4, 0, "10.0249058750", 10.0249058750, nullptr, NN, NN, NN},
        {2, O1, 1, 0, 0, "0.09972656243", 0.09972656243, nullptr, NN, NN, NN},
        {2, O1, 1, 1, 0, "3.45352640920", 3.45352640920, nullptr, NN, NN, NN},
        {2, O1, 1, 2, 0, "5.84343077651", 5.84343077651, nullptr, NN, NN, NN},
        {2, O1, 1, 3, 0, "8.10379870369", 8.10379870369, nullptr, NN, NN, NN},
        {2, O1, 1, 4, 0, "10.3072928767", 10.3072928767, nullptr, NN, NN, NN},
        {2, O2, 0, 0, 0, "3.50000000000", 3.50000000000, "3.5", 3.5, NN, NN},       // closed form
        {2, O2, 0, 1, 0, "5.99788108291", 5.99788108291, nullptr, NN, NN, NN},
        {2, O2, 0, 2, 0, "8.35808537819", 8.35808537819, nullptr, NN, NN, NN},
        {2, O2, 0, 3, 0, "10.6486411431", 10.6486411431, nullptr, NN, NN, NN},
        {2, O2, 0, 4, 0, "12.8960139536", 12.8960139536, nullptr, NN, NN, NN},
        {2, O2, 1, 0, 0, "3.75153315114", 3.75153315114, nullptr, NN, NN, NN},
        {2, O2, 1, 1, 0, "6.20248548924", 6.20248548924, nullptr, NN, NN, NN},
        {2, O2, 1, 2, 0, "8.53779618512", 8.53779618512, nullptr, NN, NN, NN},
        {2, O2, 1, 3, 0, "10.8121723015", 10.8121723015, nullptr, NN, NN, NN},
        {2, O2, 1, 4, 0, "13.0478732292", 13.0478732292, nullptr, NN, NN, NN},
        {2, O3, 0, 0, 0, "2.04810689953", 2.04810689953, "2.0481069", NN, NN, NN},  // B-spline basis
        // The parenthesized B-spline value below superseded an earlier
        // 6.048105 estimate for this state; the higher-accuracy figure is
        // the comparison target.
        {2, O3, 0, 1, 0, "4.24927125613", 4.24927125613, "4.24927125", NN, NN, NN}, // B-spline basis
        {2, O3, 0, 2, 0, "6.39227593858", 6.39227593858, "6.3922759", NN, NN, NN},  // B-spline basis
        {2, O3, 0, 3, 0, "8.50708702884", 8.50708702884, "8.507087", NN, NN, NN},   // B-spline basis
        {2, O3, 0, 4, 0, "10.6046536820", 10.6046536820, nullptr, NN, NN, NN},
        {2, O3, 1, 0, 0, "2.63680868564", 2.63680868564, nullptr, NN, NN, NN},
        {2, O3, 1, 1, 0, "4.73981650048", 4.73981650048, nullptr, NN, NN, NN},
        {2, O3, 1, 2, 0, "6.82842134800", 6.82842134800, nullptr, NN, NN, NN},
        {2, O3, 1, 3, 0, "8.90686191659", 8.90686191659, nullptr, NN, NN, NN},
        {2, O3, 1, 4, 0, "10.9776953418", 10.9776953418, nullptr, NN, NN, NN},
        {2, O4, 0, 0, 0, "2.50000000000", 2.50000000000, "2.5", 2.5, NN, NN},       // closed form
        {2, O4, 0, 1, 0, "4.76648152281", 4.76648152281, nullptr, NN, NN, NN},
        {2, O4, 0, 2, 0, "6.95840432469", 6.95840432469, nullptr, NN, NN, NN},
        {2, O4, 0, 3, 0, "9.11294921787", 9.11294921787, nullptr, NN, NN, NN},
        {2, O4, 0, 4, 0, "11.2443693329", 11.2443693329, nullptr, NN, NN, NN},
        {2, O4, 1, 0, 0, "2.93583462256", 2.93583462256, nullptr, NN, NN, NN},
        {2, O4, 1, 1, 0, "5.12713779958", 5.12713779958, nullptr, NN, NN, NN},
        {2, O4, 1, 2, 0, "7.27829362569", 7.27829362569, nullptr, NN, NN, NN},
        {2, O4, 1, 3, 0, "9.40592929257", 9.40592929257, nullptr, NN, NN, NN},
        {2, O4, 1, 4, 0, "11.5177212332", 11.5177212332, nullptr, NN, NN, NN},
        {2, O5, 0, 0, 0, "5.49999999999", 5.49999999999, "5.5", 5.5, NN, NN},       // closed form
        {2, O5, 0, 1, 0, "7.97997008055", 7.97997008055, nullptr, NN, NN, NN},
        {2, O5, 0, 2, 0, "10.3661382958", 10.3661382958, nullptr, NN, NN, NN},
        {2, O5, 0, 3, 0, "12.6938328534", 12.6938328534, nullptr, NN, NN, NN},
        {2, O5, 0, 4, 0, "14.9811074983", 14.9811074983, nullptr, NN, NN, NN},
        {2, O5, 1, 0, 0, "5.65277606191", 5.65277606191, nullptr, NN, NN, NN},
        {2, O5, 1, 1, 0, "8.11418055620", 8.11418055620, nullptr, NN, NN, NN},
        {2, O5, 1, 2, 0, "10.4882632705", 10.4882632705, nullptr, NN, NN, NN},
        {2, O5, 1, 3, 0, "12.8072549804", 12.8072549804, nullptr, NN, NN, NN},
        {2, O5, 1, 4, 0, "15.0878538581", 15.0878538581, nullptr, NN, NN, NN},

        // ---- Table 3: a = 0.5, b = 0.5, c = 0.4, l = 0,2,4,6,8, ten states
        // each. Parenthesized figures come from the analytic-continuation
        // method and must match our truncation digit for digit.
        {3, O6, 0, 0, 0, "2.46735982710", 2.46735982710, "2.46735982710", NN, NN, NN}, // analytic continuation
        {3, O6, 0, 1, 0, "4.72473466150", 4.72473466150, "4.72473466150", NN, NN, NN}, // analytic continuation
        {3, O6, 0, 2, 0, "6.91000701257", 6.91000701257, "6.91000701257", NN, NN, NN}, // analytic continuation
        {3, O6, 0, 3, 0, "9.05914846383", 9.05914846383, "9.05914846383", NN, NN, NN}, // analytic continuation
        {3, O6, 0, 4, 0, "11.1859453067", 11.1859453067, nullptr, NN, NN, NN},
        {3, O6, 0, 5, 0, "13.2973083828", 13.2973083828, nullptr, NN, NN, NN},
        {3, O6, 0, 6, 0, "15.3972525569", 15.3972525569, nullptr, NN, NN, NN},
        {3, O6, 0, 7, 0, "17.4883415197", 17.4883415197, nullptr, NN, NN, NN},
        {3, O6, 0, 8, 0, "19.5723241622", 19.5723241622, nullptr, NN, NN, NN},
        {3, O6, 0, 9, 0, "21.6504533563", 21.6504533563, nullptr, NN, NN, NN},
        {3, O6, 2, 0, 0, "3.66898315916", 3.66898315916, "3.66898315916", NN, NN, NN}, // analytic continuation
        {3, O6, 2, 1, 0, "5.76433139697", 5.76433139697, "5.76433139697", NN, NN, NN}, // analytic continuation
        {3, O6, 2, 2, 0, "7.85154984749", 7.85154984749, "7.85154984749", NN, NN, NN}, // analytic continuation
        {3, O6, 2, 3, 0, "9.93195050802", 9.93195050802, "9.93195050802", NN, NN, NN}, // analytic continuation
        {3, O6, 2, 4, 0, "12.0066617412", 12.0066617412, nullptr, NN, NN, NN},
        {3, O6, 2, 5, 0, "14.0765778031", 14.0765778031, nullptr, NN, NN, NN},
        {3, O6, 2, 6, 0, "16.1424011188", 16.1424011188, nullptr, NN, NN, NN},
        {3, O6, 2, 7, 0, "18.2046882685", 18.2046882685, nullptr, NN, NN, NN},
        {3, O6, 2, 8, 0, "20.2638861627", 20.2638861627, nullptr, NN, NN, NN},
        {3, O6, 2, 9, 0, "22.3203586599", 22.3203586599, nullptr, NN, NN, NN},
        {3, O6, 4, 0, 0, "5.54021470933", 5.54021470933, nullptr, NN, NN, NN},
        {3, O6, 4, 1, 0, "7.55977095004", 7.55977095004, nullptr, NN, NN, NN},
        {3, O6, 4, 2, 0, "9.58076033037", 9.58076033037, nullptr, NN, NN, NN},
        {3, O6, 4, 3, 0, "11.6028526028", 11.6028526028, nullptr, NN, NN, NN},
        {3, O6, 4, 4, 0, "13.6257807401", 13.6257807401, nullptr, NN, NN, NN},
        {3, O6, 4, 5, 0, "15.6493304068", 15.6493304068, nullptr, NN, NN, NN},
        {3, O6, 4, 6, 0, "17.6733301630", 17.6733301630, nullptr, NN, NN, NN},
        {3, O6, 4, 7, 0, "19.6976430683", 19.6976430683, nullptr, NN, NN, NN},
        {3, O6, 4, 8, 0, "21.7221597681", 21.7221597681, nullptr, NN, NN, NN},
        {3, O6, 4, 9, 0, "23.7467929198", 23.7467929198, nullptr, NN, NN, NN},
        {3, O6, 6, 0, 0, "7.51634080120", 7.51634080120, nullptr, NN, NN, NN},
        {3, O6, 6, 1, 0, "9.52189664743", 9.52189664743, nullptr, NN, NN, NN},
        {3, O6, 6, 2, 0, "11.5278374936", 11.5278374936, nullptr, NN, NN, NN},
        {3, O6, 6, 3, 0, "13.5341458494", 13.5341458494, nullptr, NN, NN, NN},
        {3, O6, 6, 4, 0, "15.5408038979", 15.5408038979, nullptr, NN, NN, NN},
        {3, O6, 6, 5, 0, "17.5477937216", 17.5477937216, nullptr, NN, NN, NN},
        {3, O6, 6, 6, 0, "19.5550974910", 19.5550974910, nullptr, NN, NN, NN},
        {3, O6, 6, 7, 0, "21.5626976193", 21.5626976193, nullptr, NN, NN, NN},
        {3, O6, 6, 8, 0, "23.5705768873", 23.5705768873, nullptr, NN, NN, NN},
        {3, O6, 6, 9, 0, "25.5787185402", 25.5787185402, nullptr, NN, NN, NN},
        {3, O6, 8, 0, 0, "9.50878342955", 9.50878342955, nullptr, NN, NN, NN},
        {3, O6, 8, 1, 0, "11.5110218564", 11.5110218564, nullptr, NN, NN, NN},
        {3, O6, 8, 2, 0, "13.5133680513", 13.5133680513, nullptr, NN, NN, NN},
        {3, O6, 8, 3, 0, "15.5158206760", 15.5158206760, nullptr, NN, NN, NN},
        {3, O6, 8, 4, 0, "17.5183783293", 17.5183783293, nullptr, NN, NN, NN},
        {3, O6, 8, 5, 0, "19.5210395512", 19.5210395512, nullptr, NN, NN, NN},
        {3, O6, 8, 6, 0, "21.5238028285", 21.5238028285, nullptr, NN, NN, NN},
        {3, O6, 8, 7, 0, "23.5266665991", 23.5266665991, nullptr, NN, NN, NN},
        {3, O6, 8, 8, 0, "25.5296292578", 25.5296292578, nullptr, NN, NN, NN},
        {3, O6, 8, 9, 0, "27.5326891600", 27.5326891600, nullptr, NN, NN, NN},

        // ---- Table 4: Coulomb core with linear + quadratic confinement.
        // Ground-state bounds: Stieltjes moment method. Parenthesized l = 1
        // figures for Z=8: Hill-determinant values (rounded, informational);
        // the lowest of them also has a supersymmetric closed form.
        {4, C1, 0, 0, 0, "-0.29608776768", -0.29608776768, nullptr, NN, -0.296088, -0.296087}, // Stieltjes bounds
        {4, C1, 0, 1, 0, "0.87913607777", 0.87913607777, nullptr, NN, NN, NN},
        {4, C1, 0, 2, 0, "1.8709768364", 1.8709768364, nullptr, NN, NN, NN},
        {4, C1, 0, 3, 0, "2.8225931925", 2.8225931925, nullptr, NN, NN, NN},
        {4, C1, 1, 0, 0, "0.57456732342", 0.57456732342, nullptr, NN, NN, NN},
        {4, C1, 1, 1, 0, "1.5383941205", 1.5383941205, nullptr, NN, NN, NN},
        {4, C1, 1, 2, 0, "2.4746029046", 2.4746029046, nullptr, NN, NN, NN},
        {4, C1, 1, 3, 0, "3.3984488837", 3.3984488837, nullptr, NN, NN, NN},
        {4, C2, 0, 0, 0, "4.1501236516", 4.1501236516, nullptr, NN, 4.1501236, 4.1501239}, // Stieltjes bounds
        {4, C2, 0, 1, 0, "13.602643792", 13.602643792, nullptr, NN, NN, NN},
        {4, C2, 0, 2, 0, "22.793852381", 22.793852381, nullptr, NN, NN, NN},
        {4, C2, 0, 3, 0, "31.896276164", 31.896276164, nullptr, NN, NN, NN},
        {4, C2, 1, 0, 0, "9.5524662112", 9.5524662112, nullptr, NN, NN, NN},
        {4, C2, 1, 1, 0, "18.672142320", 18.672142320, nullptr, NN, NN, NN},
        {4, C2, 1, 2, 0, "27.731460369", 27.731460369, nullptr, NN, NN, NN},
        {4, C2, 1, 3, 0, "36.760042590", 36.760042590, nullptr, NN, NN, NN},
        {4, C3, 0, 0, 0, "59.375469050", 59.375469050, nullptr, NN, 59.3754689, 59.3754694}, // Stieltjes bounds
        {4, C3, 0, 1, 0, "150.17477151", 150.17477151, nullptr, NN, NN, NN},
        {4, C3, 0, 2, 0, "240.33685382", 240.33685382, nullptr, NN, NN, NN},
        {4, C3, 0, 3, 0, "330.25417894", 330.25417894, nullptr, NN, NN, NN},
        {4, C3, 1, 0, 0, "106.73670248", 106.73670248, nullptr, NN, NN, NN},
        {4, C3, 1, 1, 0, "196.69803480", 196.69803480, nullptr, NN, NN, NN},
        {4, C3, 1, 2, 0, "286.48903994", 286.48903994, nullptr, NN, NN, NN},
        {4, C3, 1, 3, 0, "376.19005553", 376.19005553, nullptr, NN, NN, NN},
        {4, C4, 0, 0, 0, "-31.811410973", -31.811410973, nullptr, NN, NN, NN},
        {4, C4, 0, 1, 0, "-7.2458571746", -7.2458571746, nullptr, NN, NN, NN},
        {4, C4, 0, 2, 0, "-1.9150955585", -1.9150955585, nullptr, NN, NN, NN},
        {4, C4, 0, 3, 0, "0.70500521291", 0.70500521291, nullptr, NN, NN, NN},
        {4, C4, 1, 0, 0, "-7.3750000000", -7.3750000000, "-7.375000", -7.375, NN, NN}, // supersymmetric factorization; Hill determinant
        {4, C4, 1, 1, 0, "-2.0483079877", -2.0483079877, "-2.048308", NN, NN, NN},     // Hill determinant
        {4, C4, 1, 2, 0, "0.56785978768", 0.56785978768, "0.567860", NN, NN, NN},      // Hill determinant
        {4, C4, 1, 3, 0, "2.4020644372", 2.4020644372, "2.402064", NN, NN, NN},        // Hill determinant
        {4, C5, 0, 0, 0, "-49.224345286", -49.224345286, nullptr, NN, NN, NN},
        {4, C5, 0, 1, 0, "-9.2898790404", -9.2898790404, nullptr, NN, NN, NN},
        {4, C5, 0, 2, 0, "1.4166337230", 1.4166337230, nullptr, NN, NN, NN},
        {4, C5, 0, 3, 0, "8.1281375830", 8.1281375830, nullptr, NN, NN, NN},
        {4, C5, 1, 0, 0, "-9.8803468590", -9.8803468590, nullptr, NN, NN, NN},
        {4, C5, 1, 1, 0, "0.75901704864", 0.75901704864, nullptr, NN, NN, NN},
        {4, C5, 1, 2, 0, "7.4188810789", 7.4188810789, nullptr, NN, NN, NN},
        {4, C5, 1, 3, 0, "12.855211501", 12.855211501, nullptr, NN, NN, NN},

        // ---- Table 5: Z = 12, g = 1, lambda = 1/32; l = 0, 2, 5, ten
        // states each. The lowest l = 2 state has a supersymmetric closed
        // form; the other parenthesized values are Hill-determinant results
        // (rounded, informational).
        {5, C6, 0, 0, 0, "-71.874422806", -71.874422806, nullptr, NN, NN, NN},
        {5, C6, 0, 1, 0, "-17.494216229", -17.494216229, nullptr, NN, NN, NN},
        {5, C6, 0, 2, 0, "-6.8642582202", -6.8642582202, nullptr, NN, NN, NN},
        {5, C6, 0, 3, 0, "-2.5279008987", -2.5279008987, nullptr, NN, NN, NN},
        {5, C6, 0, 4, 0, "0.05747113632", 0.05747113632, nullptr, NN, NN, NN},
        {5, C6, 0, 5, 0, "1.9612173543", 1.9612173543, nullptr, NN, NN, NN},
        {5, C6, 0, 6, 0, "3.5304071400", 3.5304071400, nullptr, NN, NN, NN},
        {5, C6, 0, 7, 0, "4.9063624018", 4.9063624018, nullptr, NN, NN, NN},
        {5, C6, 0, 8, 0, "6.1573955416", 6.1573955416, nullptr, NN, NN, NN},
        {5, C6, 0, 9, 0, "7.3210117750", 7.3210117750, nullptr, NN, NN, NN},
        {5, C6, 2, 0, 0, "-7.1250000000", -7.1250000000, "-7.125000", -7.125, NN, NN}, // supersymmetric factorization; Hill determinant
        {5, C6, 2, 1, 0, "-2.7950831896", -2.7950831896, "-2.795083", NN, NN, NN},     // Hill determinant
        {5, C6, 2, 2, 0, "-0.21588294422", -0.21588294422, "-0.215883", NN, NN, NN},   // Hill determinant
        {5, C6, 2, 3, 0, "1.6823565181", 1.6823565181, "1.682357", NN, NN, NN},        // Hill determinant
        {5, C6, 2, 4, 0, "3.2467031143", 3.2467031143, nullptr, NN, NN, NN},
        {5, C6, 2, 5, 0, "4.6183716246", 4.6183716246, nullptr, NN, NN, NN},
        {5, C6, 2, 6, 0, "5.8655676414", 5.8655676414, nullptr, NN, NN, NN},
        {5, C6, 2, 7, 0, "7.0257108497", 7.0257108497, nullptr, NN, NN, NN},
        {5, C6, 2, 8, 0, "8.1213708656", 8.1213708656, nullptr, NN, NN, NN},
        {5, C6, 2, 9, 0, "9.1671716851", 9.1671716851, nullptr, NN, NN, NN},
        {5, C6, 5, 0, 0, "0.78955622011", 0.78955622011, nullptr, NN, NN, NN},
        {5, C6, 5, 1, 0, "2.3644580048", 2.3644580048, nullptr, NN, NN, NN},
        {5, C6, 5, 2, 0, "3.7444823185", 3.7444823185, nullptr, NN, NN, NN},
        {5, C6, 5, 3, 0, "4.9984881647", 4.9984881647, nullptr, NN, NN, NN},
        {5, C6, 5, 4, 0, "6.1643195425", 6.1643195425, nullptr, NN, NN, NN},
        {5, C6, 5, 5, 0, "7.2648275518", 7.2648275518, nullptr, NN, NN, NN},
        {5, C6, 5, 6, 0, "8.3148289025", 8.3148289025, nullptr, NN, NN, NN},
        {5, C6, 5, 7, 0, "9.3244751785", 9.3244751785, nullptr, NN, NN, NN},
        {5, C6, 5, 8, 0, "10.301031550", 10.301031550, nullptr, NN, NN, NN},
        {5, C6, 5, 9, 0, "11.249883522", 11.249883522, nullptr, NN, NN, NN},

        // ---- Table 6: radial moments <1/r> and <r> for one potential of
        // each family. Parenthesized figures: independent variational
        // results for the Coulomb-core case.
        {6, O1, 0, 0, -1, "1.037245259", 1.037245259, nullptr, NN, NN, NN},
        {6, O1, 0, 0, +1, "1.040404541", 1.040404541, nullptr, NN, NN, NN},
        {6, O1, 0, 1, -1, "0.6106362329", 0.6106362329, nullptr, NN, NN, NN},
        {6, O1, 0, 1, +1, "1.883380179", 1.883380179, nullptr, NN, NN, NN},
        {6, O1, 0, 2, -1, "0.5127801051", 0.5127801051, nullptr, NN, NN, NN},
        {6, O1, 0, 2, +1, "2.390745126", 2.390745126, nullptr, NN, NN, NN},
        {6, O1, 1, 0, -1, "0.9798264559", 0.9798264559, nullptr, NN, NN, NN},
        {6, O1, 1, 0, +1, "1.109065417", 1.109065417, nullptr, NN, NN, NN},
        {6, O1, 1, 1, -1, "0.5975951150", 0.5975951150, nullptr, NN, NN, NN},
        {6, O1, 1, 1, +1, "1.946934875", 1.946934875, nullptr, NN, NN, NN},
        {6, O1, 1, 2, -1, "0.5093809276", 0.5093809276, nullptr, NN, NN, NN},
        {6, O1, 1, 2, +1, "2.427714809", 2.427714809, nullptr, NN, NN, NN},
        {6, C7, 0, 0, -1, "1.426727774", 1.426727774, "1.4267278", NN, NN, NN},   // independent variational
        {6, C7, 0, 0, +1, "0.9267277745", 0.9267277745, "0.92672779", NN, NN, NN}, // independent variational
        {6, C7, 0, 1, -1, "1.054078325", 1.054078325, "1.0540783", NN, NN, NN},   // independent variational
        {6, C7, 0, 1, +1, "1.549650851", 1.549650851, "1.5496509", NN, NN, NN},   // independent variational
        {6, C7, 0, 2, -1, "0.9037976872", 0.9037976872, nullptr, NN, NN, NN},
        {6, C7, 0, 2, +1, "1.990327571", 1.990327571, nullptr, NN, NN, NN},
        {6, C7, 1, 0, -1, "0.8497088122", 0.8497088122, "0.84970883", NN, NN, NN}, // independent variational
        {6, C7, 1, 0, +1, "1.345281337", 1.345281337, "1.3452814", NN, NN, NN},   // independent variational
        {6, C7, 1, 1, -1, "0.7355708974", 0.7355708974, "0.73557090", NN, NN, NN}, // independent variational
        {6, C7, 1, 1, +1, "1.822100782", 1.822100782, "1.8221008", NN, NN, NN},   // independent variational
        {6, C7, 1, 2, -1, "0.6671751957", 0.6671751957, nullptr, NN, NN, NN},
        {6, C7, 1, 2, +1, "2.204434707", 2.204434707, nullptr, NN, NN, NN},
    };
    return rows;
}

} // namespace

const std::vector<RefEntry>& reference_entries() { return data(); }

std::vector<RefEntry> table_entries(int table) {
    if (table < 1 || table > 6) throw std::out_of_range("table_entries: table id must be 1..6");
    std::vector<RefEntry> out;
    for (const RefEntry& e : data())
        if (e.table == table) out.push_back(e);
    return out;
}

double table_tolerance(int table) {
    switch (table) {
        case 1: return 1e-8;
        case 2: return 1e-9;
        case 3: return 1e-9;
        case 4: return 1e-8;
        case 5: return 1e-8;
        case 6: return 1e-7;
        default: throw std::out_of_range("table_tolerance: table id must be 1..6");
    }
}

TableReport verify_table(int table, const GridSpec& grid) {
    const std::vector<RefEntry> entries = table_entries(table);
    const double tol = table_tolerance(table);

    // One solve per (potential, l) group, deep enough for its highest state.
    std::map<std::pair<std::string, int>, int> depth;
    for (const RefEntry& e : entries) {
        int& k = depth[{e.potential, e.l}];
        k = std::max(k, e.state + 1);
    }
    const CollocationSet set = build_collocation(grid.N);
    std::map<std::pair<std::string, int>, Spectrum> solved;
    for (const auto& [key, k] : depth)
        solved.emplace(key, solve_states(grid, set, parse_potential(key.first), key.second, k));

    TableReport rep;
    rep.table = table;
    rep.pass = true;
    for (const RefEntry& e : entries) {
        const Spectrum& sp = solved.at({e.potential, e.l});
        const BoundState& st = sp.states.at(static_cast<std::size_t>(e.state));
        const double computed =
            e.moment_power == 0 ? st.energy : expectation(st, e.moment_power, set, grid);

        CellResult cell;
        cell.entry = e;
        cell.computed = computed;
        cell.error = std::abs(computed - e.reference);
        cell.pass = true;
        auto fail = [&cell](const std::string& why) {
            cell.pass = false;
            if (!cell.detail.empty()) cell.detail += "; ";
            cell.detail += why;
        };

        if (!st.physical) fail("state sits above the confinement ceiling");
        if (cell.error > tol)
            fail("off reference " + std::string(e.printed) + " by " + std::to_string(cell.error));
        if (!std::isnan(e.exact) && std::abs(computed - e.exact) > 1e-9)
            fail("off closed-form value " + std::to_string(e.exact) + " by " +
                 std::to_string(std::abs(computed - e.exact)));
        if (!std::isnan(e.bound_lo) && !(computed >= e.bound_lo && computed <= e.bound_hi))
            fail("outside independent bounds [" + std::to_string(e.bound_lo) + ", " +
                 std::to_string(e.bound_hi) + "]");
        if (e.paren != nullptr) {
            if (e.table == 3) {
                const std::string ours = truncate_decimals(computed, decimals_of(e.paren));
                if (ours != e.paren)
                    fail("truncation " + ours + " != independent digits " + e.paren);
            } else if (e.table == 6) {
                const double ref = std::strtod(e.paren, nullptr);
                if (std::abs(computed - ref) > 1e-7)
                    fail("off independent value " + std::string(e.paren) + " by " +
                         std::to_string(std::abs(computed - ref)));
            }
        }

        rep.worst_error = std::max(rep.worst_error, cell.error);
        rep.pass = rep.pass && cell.pass;
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

} // namespace radgps
