// generated by tools/gen_reference_values.py; do not edit
#pragma once

#include <limits>

namespace polya::testdata {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct LogGammaRatioCase { double z; double s; double value; }; // ln Gamma(z) - ln Gamma(z+s)
inline constexpr LogGammaRatioCase kLogGammaRatio[] = {
    {0.25, 0.5, 1.084741573266782},
    {0.4, 1.2, 0.9092695833985395},
    {0.6666666666666666, 0.3333333333333333, 0.3031502751475236},
    {0.5, 0.5, 0.5723649429247001},
    {1.0, 0.6, 0.11259176569675579},
    {1.5, 2.0, -1.3217558399823195},
    {10.0, -0.75, 1.6584273601297572},
    {31.875, 0.5, -1.726989593887405},
    {32.0, 2.0, -6.962243464266207},
    {10000.4, 0.6, -5.526216223225704},
    {123456.75, 1.2, -14.068376377541473},
    {1000000.3333333334, 0.3333333333333333, -4.605170185988103},
};

struct HurwitzCase { double s; double a; double value; };
inline constexpr HurwitzCase kHurwitz[] = {
    {1.2, 1.4, 5.05386052001915},
    {1.2, 20001.4, 0.689858622097518},
    {2.0, 0.4, 7.275356590529597},
    {2.2, 20001.4, 5.7485631640331775e-06},
    {3.0, 0.25, 64.66386996876847},
    {3.2, 5.0, 0.016381845942506395},
    {4.5, 100.0, 2.9075178348024978e-08},
    {1.0001, 2.0, 9999.577222947539},
};

inline constexpr long long kSigmaNs[] = {1, 2, 10, 100, 10000, 1000000};
inline constexpr long long kWNs[] = {1, 10, 1000};
inline constexpr long long kWBigN = 1000000;
inline constexpr long long kMeanNs[] = {1, 10, 1000};
inline constexpr long long kVarNs[] = {1, 2, 10, 100, 512};

struct ModelRef {
    const char* name;
    long long a, b, c, d, alpha, beta;
    double lambda;    // lim n^sigma * sigma_n
    double asymptote; // regime w_n limit constant (NaN for Traditional)
    double sigma_at[6];
    double w_at[3];
    double w_big;     // w_n at kWBigN (NaN where not frozen)
    double mean_at[3][2];
    double var_at[5];
};

inline constexpr ModelRef kModels[] = {
    {"traditional", 1, 0, 0, 1, 2, 3,
     5.0, kNaN,
     {0.8333333333333334, 0.7142857142857143, 0.3333333333333333, 0.047619047619047616, 0.0004997501249375312, 4.9999750001249995e-06},
     {0.6944444444444444, 2.9207293083468993, 4.508210643363839}, kNaN,
     {{2.4, 3.6}, {6.0, 9.0}, {402.0, 603.0}},
     {0.24, 0.56, 6.0, 420.0, 10588.16}},
    {"small", 2, 1, 1, 2, 1, 1,
     0.7384881116216483, 1.6360940730195244,
     {0.6666666666666666, 0.5555555555555556, 0.3390105601771619, 0.15892585702557321, 0.034277200868801025, 0.007384880295674228},
     {0.4444444444444444, 2.0545606738382736, 14.799437725718994}, 162.04340606863656,
     {{2.5, 2.5}, {16.0, 16.0}, {1501.0, 1501.0}},
     {0.25, 0.6, 4.363876885086868, 59.11060057689675, 335.94347406827524}},
    {"critical", 3, 1, 1, 3, 1, 1,
     0.5641895835477563, 0.3183098861837907,
     {0.5, 0.375, 0.17619705200195312, 0.05634847900925642, 0.00564182531222042, 0.0005641895130240628},
     {0.25, 0.8223893427202711, 2.265321310991093}, 4.463889685217824,
     {{3.0, 3.0}, {21.0, 21.0}, {2001.0, 2001.0}},
     {1.0, 2.6666666666666665, 24.798366133350655, 460.1527800496285, 3179.440340128354}},
    {"large", 4, 1, 1, 4, 1, 1,
     0.4508241991944111, 1.0700983252962855,
     {0.4, 0.28, 0.111887204352, 0.028410959098814283, 0.0017947419264792107, 0.00011324190530623142},
     {0.16, 0.4376008127496618, 0.8148730631169652}, 1.0059796732974904,
     {{3.5, 3.5}, {26.0, 26.0}, {2501.0, 2501.0}},
     {2.25, 6.428571428571429, 70.69116318177645, 1693.4397204776144, 14175.992646007087}},
    {"large_skew", 4, 1, 1, 4, 2, 1,
     0.6165548760623244, 1.9160882885396635,
     {0.5, 0.36363636363636365, 0.1512472809737585, 0.038808854109795, 0.0024544902643135547, 0.0001548715455770319},
     {0.25, 0.7374485356661775, 1.4387400389329754}, 1.796162274414771,
     {{5.0, 3.0}, {29.805844553243574, 23.194155446756426}, {2552.6802595943313, 2450.3197404056687}},
     {2.0, 5.609375, 62.17364153700921, 1537.2711512320868, 13047.019858847383}},
    {"small_negative", 1, 3, 3, 1, 2, 2,
     1.772453850905516, 1.5707963267948966,
     {2.0, 2.6666666666666665, 5.675463855030419, 17.746707942830703, 177.24760067171167, 1772.4540724622611},
     {4.0, 180.88966433729365, 1573153.2143621075}, kNaN,
     {{4.0, 4.0}, {22.0, 22.0}, {2002.0, 2002.0}},
     {1.0, 1.5, 5.5, 50.5, 256.5}},
    {"small_quarter", 2, 2, 1, 3, 1, 1,
     0.6913673390362933, 0.95597759497225,
     {0.6666666666666666, 0.5714285714285714, 0.3875420200805895, 0.21856106781028575, 0.06913651784627234, 0.021862954228827784},
     {0.4444444444444444, 2.334962627929748, 29.458502361343857}, kNaN,
     {{2.5, 3.5}, {14.860121783088236, 27.139878216911764}, {1336.7113367538564, 2665.2886632461436}},
     {0.25, 0.5763888888888888, 3.6401499238943695, 41.83227944404796, 221.75274179997987}},
};

inline constexpr long long kWestNs[] = {10000, 1000000};
struct LargeRef {
    const char* name;
    double ew, ew2, em2;
    double west_mean[2]; // exact E of the finite-n estimator
    double west_sq[2];   // exact E of its square
};
inline constexpr LargeRef kLargeRefs[] = {
    {"large", 0.0, 1.7874061959637542, 0.36327682974751535,
     {0.001592428682213989, 0.0001004754572603832}, {1.5022237904336349, 1.67383491106744}},
    {"large_skew", 0.32438312916656425, 1.7907712917468646, 0.6407436469804931,
     {0.32677955737460324, 0.3245339202044048}, {1.5071792395091792, 1.6772982062126103}},
};

// model whose Gamma form hits a pole (tau + m = 0): only the mean is frozen
inline constexpr long long kPoleModel[6] = {0, 4, 3, 1, 2, 1};
inline constexpr long long kPoleMeanNs[] = {1, 10, 100};
inline constexpr double kPoleMean[][2] = {
    {3.0, 4.0},
    {18.428571428571427, 24.571428571428573},
    {172.71428571428572, 230.28571428571428},
};

struct BetaIncCase { double a; double b; double x; double value; };
inline constexpr BetaIncCase kBetaInc[] = {
    {0.5, 0.5, 0.3, 0.36901011956554536},
    {1.0, 1.0, 0.42, 0.42},
    {2.0, 1.0, 0.6, 0.36},
    {2.5, 3.5, 0.77, 0.9662751921823505},
    {5.0, 2.0, 0.9, 0.885735},
    {0.2, 0.3, 0.5, 0.6058293182473327},
    {2.0, 3.0, 0.37, 0.47240083},
    {2.0, 3.0, 0.9, 0.9963},
};

inline constexpr double kKolmogorov99 = 1.6276236115189504;
struct KolmogorovCdfCase { double x; double value; };
inline constexpr KolmogorovCdfCase kKolmogorovCdf[] = {
    {0.5, 0.03605475633512491},
    {1.0, 0.7300003283226455},
    {1.3581015157406195, 0.9500007812499923},
};

} // namespace polya::testdata
