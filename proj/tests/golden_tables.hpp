#pragma once

// Published spectra of the six reference mappings, copied row by row.
// Rows are kept exactly as printed, including the ones whose counts do not
// sum to the enumeration domain; the acceptance binary reports those.

#include <array>
#include <string_view>

namespace golden {

struct Row {
    std::string_view spec;   // family spec accepted by parse_family_spec
    std::string_view label;
    long long headline;
    std::string_view multiset;
};

struct FunctionRow {
    std::string_view spec;
    std::string_view label;
    int degree;
};

inline constexpr std::array<FunctionRow, 6> kFunctions{{
    {"chi:5", "chi_5", 2},
    {"chi_nm:5:3", "chi_{5,3}", 3},
    {"chi_nm:6:4", "chi_{6,4}", 4},
    {"concat(chi:3,chi:3)", "chi_3||chi_3", 2},
    {"chi_nm:8:3", "chi_{8,3}", 3},
    {"cchi:8", "CHICHI_8", 2},
}};

inline constexpr std::array<Row, 6> kDifferential{{
    {"chi:5", "chi_5", 8, "{0^676,2^176,4^120,8^20}"},
    {"chi_nm:5:3", "chi_{5,3}", 14, "{0^721,2^126,4^90,6^45,8^5,14^5}"},
    {"chi_nm:6:4", "chi_{6,4}", 38, "{0^3441,2^168,4^144,6^120,8^96,22^21,24^15,26^12,30^9,38^6}"},
    {"concat(chi:3,chi:3)", "chi_3||chi_3", 16, "{0^3192,4^784,16^56}"},
    {"chi_nm:8:3", "chi_{8,3}", 112,
     "{0^56681,2^1896,4^2045,6^980,8^1544,10^352,12^720,14^176,"
     "16^360,18^106,20^112,22^40,24^64,26^8,28^48,30^16,"
     "32^24,34^8,36^24,38^8,40^16,44^12,48^16,60^8,112^8}"},
    {"cchi:8", "CHICHI_8", 64, "{0^56088,4^4928,8^3360,16^736,32^120,64^48}"},
}};

inline constexpr std::array<Row, 6> kWalsh{{
    {"chi:5", "chi_5", 8, "{0^647,-8^126,8^210,-16^10,16^30,32}"},
    {"chi_nm:5:3", "chi_{5,3}", 4, "{0^657,-8^101,8^230,-16^20,16^10,24^5,32}"},
    {"chi_nm:6:4", "chi_{6,4}", 4,
     "{0^2400,-8^480,8^936,-16^144,16^49,-24^24,24^6,32^15,40^20,48^15,64}"},
    {"concat(chi:3,chi:3)", "chi_3||chi_3", 16, "{0^3255,-16^490,16^294,-32^14,32^42,64}"},
    {"chi_nm:8:3", "chi_{8,3}", 32,
     "{0^42040,-16^7332,16^10464,-32^1712,32^1650,-48^520,"
     "48^968,-64^257,64^300,-80^96,80^40,-96^48,96^24,"
     "-112^32,-128^16,128^16,144^12,192^8,256}"},
    {"cchi:8", "CHICHI_8", 64, "{0^54603,-32^4116,32^5292,-64^546,64^910,-128^17,128^51,256}"},
}};

inline constexpr std::array<Row, 6> kBoomerang{{
    {"chi:5", "chi_5", 16, "{0^445,2^176,4^150,8^110,12^50,16^30}"},
    {"chi_nm:5:3", "chi_{5,3}", 24, "{0^380,2^80,4^210,6^40,8^155,10^35,14^15,16^30,18^5,22,24^10}"},
    {"chi_nm:6:4", "chi_{6,4}", 58,
     "{0^36,4^756,6^24,8^1122,10^48,12^372,14^36,16^606,18^36,"
     "20^246,22^60,24^210,26^48,28^204,30^9,32^12,34^24,36^18,"
     "38^3,40^24,42^12,44^12,46^13,48^15,50^24,54^6,58^2}"},
    {"concat(chi:3,chi:3)", "chi_3||chi_3", 64, "{0^2247,4^784,16^840,64^98}"},
    {"chi_nm:8:3", "chi_{8,3}", 224,
     "{0^29228,2^1224,4^5550,6^344,8^5848,10^360,12^2068,14^224,"
     "16^4772,18^278,20^1552,22^128,24^1784,26^252,28^648,"
     "30^112,32^2944,34^168,36^369,38^56,40^800,42^152,44^304,"
     "46^24,48^1184,50^48,52^224,54^4,56^344,58^64,60^160,"
     "64^1384,66^24,68^64,70^8,72^240,74^48,76^80,80^496,"
     "82^16,84^28,88^240,90^24,92^44,96^160,100^24,104^64,"
     "108^8,112^200,114^8,116^16,118^8,120^40,128^112,"
     "136^112,140^24,142^8,144^56,146^8,152^64,156^16,"
     "160^72,176^32,184^8,192^40,200^24,224^8}"},
    {"cchi:8", "CHICHI_8", 256,
     "{0^40639,4^4928,8^4200,16^5720,24^1400,32^3090,"
     "64^3414,96^750,128^450,256^434}"},
}};

inline constexpr std::array<Row, 6> kDlct{{
    {"chi:5", "chi_5", 16, "{0^870,-16^61,16^61}"},
    {"chi_nm:5:3", "chi_{5,3}", 16, "{0^285,-4^170,4^166,-8^180,8^140,-16^15,16^36}"},
    {"chi_nm:6:4", "chi_{6,4}", 32,
     "{0^246,-4^223,4^233,-8^386,8^434,-12^300,12^279,-16^522,"
     "16^519,-20^146,20^123,-24^294,24^230,-32^18,32^69}"},
    {"concat(chi:3,chi:3)", "chi_3||chi_3", 32, "{0^3612,-32^210,32^210}"},
    {"chi_nm:8:3", "chi_{8,3}", 128,
     "{0^26352,-16^7224,16^7230,-32^8584,32^8733,"
     "-64^3298,64^2960,-128^384,128^515}"},
    {"cchi:8", "CHICHI_8", 128, "{0^62148,-128^1566,128^1566}"},
}};

}  // namespace golden
