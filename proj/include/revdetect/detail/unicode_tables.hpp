// Generated by tools/gen_unicode_tables.py (Unicode 13.0.0). Do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace revdetect::detail {

struct CodepointRange {
  char32_t lo;
  char32_t hi;
  std::uint8_t cls;
};

inline constexpr std::array<CodepointRange, 478> kCharClassRanges{{
    {0x00000, 0x00008, 4},
    {0x00009, 0x0000D, 3},
    {0x0000E, 0x0001F, 4},
    {0x00020, 0x00020, 3},
    {0x00021, 0x0002F, 1},
    {0x00030, 0x00039, 2},
    {0x0003A, 0x00040, 1},
    {0x0005B, 0x00060, 1},
    {0x0007B, 0x0007E, 1},
    {0x0007F, 0x00084, 4},
    {0x00085, 0x00085, 3},
    {0x00086, 0x0009F, 4},
    {0x000A0, 0x000A0, 3},
    {0x000A1, 0x000A9, 1},
    {0x000AB, 0x000AC, 1},
    {0x000AE, 0x000B1, 1},
    {0x000B2, 0x000B3, 2},
    {0x000B4, 0x000B4, 1},
    {0x000B6, 0x000B8, 1},
    {0x000B9, 0x000B9, 2},
    {0x000BB, 0x000BB, 1},
    {0x000BC, 0x000BE, 2},
    {0x000BF, 0x000BF, 1},
    {0x000D7, 0x000D7, 1},
    {0x000F7, 0x000F7, 1},
    {0x002C2, 0x002C5, 1},
    {0x002D2, 0x002DF, 1},
    {0x002E5, 0x002EB, 1},
    {0x002ED, 0x002ED, 1},
    {0x002EF, 0x002FF, 1},
    {0x00375, 0x00375, 1},
    {0x0037E, 0x0037E, 1},
    {0x00384, 0x00385, 1},
    {0x00387, 0x00387, 1},
    {0x003F6, 0x003F6, 1},
    {0x00482, 0x00482, 1},
    {0x0055A, 0x0055F, 1},
    {0x00589, 0x0058A, 1},
    {0x0058D, 0x0058F, 1},
    {0x005BE, 0x005BE, 1},
    {0x005C0, 0x005C0, 1},
    {0x005C3, 0x005C3, 1},
    {0x005C6, 0x005C6, 1},
    {0x005F3, 0x005F4, 1},
    {0x00606, 0x0060F, 1},
    {0x0061B, 0x0061B, 1},
    {0x0061E, 0x0061F, 1},
    {0x00660, 0x00669, 2},
    {0x0066A, 0x0066D, 1},
    {0x006D4, 0x006D4, 1},
    {0x006DE, 0x006DE, 1},
    {0x006E9, 0x006E9, 1},
    {0x006F0, 0x006F9, 2},
    {0x006FD, 0x006FE, 1},
    {0x00700, 0x0070D, 1},
    {0x007C0, 0x007C9, 2},
    {0x007F6, 0x007F9, 1},
    {0x007FE, 0x007FF, 1},
    {0x00830, 0x0083E, 1},
    {0x0085E, 0x0085E, 1},
    {0x00964, 0x00965, 1},
    {0x00966, 0x0096F, 2},
    {0x00970, 0x00970, 1},
    {0x009E6, 0x009EF, 2},
    {0x009F2, 0x009F3, 1},
    {0x009F4, 0x009F9, 2},
    {0x009FA, 0x009FB, 1},
    {0x009FD, 0x009FD, 1},
    {0x00A66, 0x00A6F, 2},
    {0x00A76, 0x00A76, 1},
    {0x00AE6, 0x00AEF, 2},
    {0x00AF0, 0x00AF1, 1},
    {0x00B66, 0x00B6F, 2},
    {0x00B70, 0x00B70, 1},
    {0x00B72, 0x00B77, 2},
    {0x00BE6, 0x00BF2, 2},
    {0x00BF3, 0x00BFA, 1},
    {0x00C66, 0x00C6F, 2},
    {0x00C77, 0x00C77, 1},
    {0x00C78, 0x00C7E, 2},
    {0x00C7F, 0x00C7F, 1},
    {0x00C84, 0x00C84, 1},
    {0x00CE6, 0x00CEF, 2},
    {0x00D4F, 0x00D4F, 1},
    {0x00D58, 0x00D5E, 2},
    {0x00D66, 0x00D78, 2},
    {0x00D79, 0x00D79, 1},
    {0x00DE6, 0x00DEF, 2},
    {0x00DF4, 0x00DF4, 1},
    {0x00E3F, 0x00E3F, 1},
    {0x00E4F, 0x00E4F, 1},
    {0x00E50, 0x00E59, 2},
    {0x00E5A, 0x00E5B, 1},
    {0x00ED0, 0x00ED9, 2},
    {0x00F01, 0x00F17, 1},
    {0x00F1A, 0x00F1F, 1},
    {0x00F20, 0x00F33, 2},
    {0x00F34, 0x00F34, 1},
    {0x00F36, 0x00F36, 1},
    {0x00F38, 0x00F38, 1},
    {0x00F3A, 0x00F3D, 1},
    {0x00F85, 0x00F85, 1},
    {0x00FBE, 0x00FC5, 1},
    {0x00FC7, 0x00FCC, 1},
    {0x00FCE, 0x00FDA, 1},
    {0x01040, 0x01049, 2},
    {0x0104A, 0x0104F, 1},
    {0x01090, 0x01099, 2},
    {0x0109E, 0x0109F, 1},
    {0x010FB, 0x010FB, 1},
    {0x01360, 0x01368, 1},
    {0x01369, 0x0137C, 2},
    {0x01390, 0x01399, 1},
    {0x01400, 0x01400, 1},
    {0x0166D, 0x0166E, 1},
    {0x01680, 0x01680, 3},
    {0x0169B, 0x0169C, 1},
    {0x016EB, 0x016ED, 1},
    {0x016EE, 0x016F0, 2},
    {0x01735, 0x01736, 1},
    {0x017D4, 0x017D6, 1},
    {0x017D8, 0x017DB, 1},
    {0x017E0, 0x017E9, 2},
    {0x017F0, 0x017F9, 2},
    {0x01800, 0x0180A, 1},
    {0x01810, 0x01819, 2},
    {0x01940, 0x01940, 1},
    {0x01944, 0x01945, 1},
    {0x01946, 0x0194F, 2},
    {0x019D0, 0x019DA, 2},
    {0x019DE, 0x019FF, 1},
    {0x01A1E, 0x01A1F, 1},
    {0x01A80, 0x01A89, 2},
    {0x01A90, 0x01A99, 2},
    {0x01AA0, 0x01AA6, 1},
    {0x01AA8, 0x01AAD, 1},
    {0x01B50, 0x01B59, 2},
    {0x01B5A, 0x01B6A, 1},
    {0x01B74, 0x01B7C, 1},
    {0x01BB0, 0x01BB9, 2},
    {0x01BFC, 0x01BFF, 1},
    {0x01C3B, 0x01C3F, 1},
    {0x01C40, 0x01C49, 2},
    {0x01C50, 0x01C59, 2},
    {0x01C7E, 0x01C7F, 1},
    {0x01CC0, 0x01CC7, 1},
    {0x01CD3, 0x01CD3, 1},
    {0x01FBD, 0x01FBD, 1},
    {0x01FBF, 0x01FC1, 1},
    {0x01FCD, 0x01FCF, 1},
    {0x01FDD, 0x01FDF, 1},
    {0x01FED, 0x01FEF, 1},
    {0x01FFD, 0x01FFE, 1},
    {0x02000, 0x0200A, 3},
    {0x02010, 0x02027, 1},
    {0x02028, 0x02029, 3},
    {0x0202F, 0x0202F, 3},
    {0x02030, 0x0205E, 1},
    {0x0205F, 0x0205F, 3},
    {0x02070, 0x02070, 2},
    {0x02074, 0x02079, 2},
    {0x0207A, 0x0207E, 1},
    {0x02080, 0x02089, 2},
    {0x0208A, 0x0208E, 1},
    {0x020A0, 0x020BF, 1},
    {0x02100, 0x02101, 1},
    {0x02103, 0x02106, 1},
    {0x02108, 0x02109, 1},
    {0x02114, 0x02114, 1},
    {0x02116, 0x02118, 1},
    {0x0211E, 0x02123, 1},
    {0x02125, 0x02125, 1},
    {0x02127, 0x02127, 1},
    {0x02129, 0x02129, 1},
    {0x0212E, 0x0212E, 1},
    {0x0213A, 0x0213B, 1},
    {0x02140, 0x02144, 1},
    {0x0214A, 0x0214D, 1},
    {0x0214F, 0x0214F, 1},
    {0x02150, 0x02182, 2},
    {0x02185, 0x02189, 2},
    {0x0218A, 0x0218B, 1},
    {0x02190, 0x02426, 1},
    {0x02440, 0x0244A, 1},
    {0x02460, 0x0249B, 2},
    {0x0249C, 0x024E9, 1},
    {0x024EA, 0x024FF, 2},
    {0x02500, 0x02775, 1},
    {0x02776, 0x02793, 2},
    {0x02794, 0x02B73, 1},
    {0x02B76, 0x02B95, 1},
    {0x02B97, 0x02BFF, 1},
    {0x02CE5, 0x02CEA, 1},
    {0x02CF9, 0x02CFC, 1},
    {0x02CFD, 0x02CFD, 2},
    {0x02CFE, 0x02CFF, 1},
    {0x02D70, 0x02D70, 1},
    {0x02E00, 0x02E2E, 1},
    {0x02E30, 0x02E52, 1},
    {0x02E80, 0x02E99, 1},
    {0x02E9B, 0x02EF3, 1},
    {0x02F00, 0x02FD5, 1},
    {0x02FF0, 0x02FFB, 1},
    {0x03000, 0x03000, 3},
    {0x03001, 0x03004, 1},
    {0x03007, 0x03007, 2},
    {0x03008, 0x03020, 1},
    {0x03021, 0x03029, 2},
    {0x03030, 0x03030, 1},
    {0x03036, 0x03037, 1},
    {0x03038, 0x0303A, 2},
    {0x0303D, 0x0303F, 1},
    {0x0309B, 0x0309C, 1},
    {0x030A0, 0x030A0, 1},
    {0x030FB, 0x030FB, 1},
    {0x03190, 0x03191, 1},
    {0x03192, 0x03195, 2},
    {0x03196, 0x0319F, 1},
    {0x031C0, 0x031E3, 1},
    {0x03200, 0x0321E, 1},
    {0x03220, 0x03229, 2},
    {0x0322A, 0x03247, 1},
    {0x03248, 0x0324F, 2},
    {0x03250, 0x03250, 1},
    {0x03251, 0x0325F, 2},
    {0x03260, 0x0327F, 1},
    {0x03280, 0x03289, 2},
    {0x0328A, 0x032B0, 1},
    {0x032B1, 0x032BF, 2},
    {0x032C0, 0x033FF, 1},
    {0x04DC0, 0x04DFF, 1},
    {0x0A490, 0x0A4C6, 1},
    {0x0A4FE, 0x0A4FF, 1},
    {0x0A60D, 0x0A60F, 1},
    {0x0A620, 0x0A629, 2},
    {0x0A673, 0x0A673, 1},
    {0x0A67E, 0x0A67E, 1},
    {0x0A6E6, 0x0A6EF, 2},
    {0x0A6F2, 0x0A6F7, 1},
    {0x0A700, 0x0A716, 1},
    {0x0A720, 0x0A721, 1},
    {0x0A789, 0x0A78A, 1},
    {0x0A828, 0x0A82B, 1},
    {0x0A830, 0x0A835, 2},
    {0x0A836, 0x0A839, 1},
    {0x0A874, 0x0A877, 1},
    {0x0A8CE, 0x0A8CF, 1},
    {0x0A8D0, 0x0A8D9, 2},
    {0x0A8F8, 0x0A8FA, 1},
    {0x0A8FC, 0x0A8FC, 1},
    {0x0A900, 0x0A909, 2},
    {0x0A92E, 0x0A92F, 1},
    {0x0A95F, 0x0A95F, 1},
    {0x0A9C1, 0x0A9CD, 1},
    {0x0A9D0, 0x0A9D9, 2},
    {0x0A9DE, 0x0A9DF, 1},
    {0x0A9F0, 0x0A9F9, 2},
    {0x0AA50, 0x0AA59, 2},
    {0x0AA5C, 0x0AA5F, 1},
    {0x0AA77, 0x0AA79, 1},
    {0x0AADE, 0x0AADF, 1},
    {0x0AAF0, 0x0AAF1, 1},
    {0x0AB5B, 0x0AB5B, 1},
    {0x0AB6A, 0x0AB6B, 1},
    {0x0ABEB, 0x0ABEB, 1},
    {0x0ABF0, 0x0ABF9, 2},
    {0x0FB29, 0x0FB29, 1},
    {0x0FBB2, 0x0FBC1, 1},
    {0x0FD3E, 0x0FD3F, 1},
    {0x0FDFC, 0x0FDFD, 1},
    {0x0FE10, 0x0FE19, 1},
    {0x0FE30, 0x0FE52, 1},
    {0x0FE54, 0x0FE66, 1},
    {0x0FE68, 0x0FE6B, 1},
    {0x0FF01, 0x0FF0F, 1},
    {0x0FF10, 0x0FF19, 2},
    {0x0FF1A, 0x0FF20, 1},
    {0x0FF3B, 0x0FF40, 1},
    {0x0FF5B, 0x0FF65, 1},
    {0x0FFE0, 0x0FFE6, 1},
    {0x0FFE8, 0x0FFEE, 1},
    {0x0FFFC, 0x0FFFD, 1},
    {0x10100, 0x10102, 1},
    {0x10107, 0x10133, 2},
    {0x10137, 0x1013F, 1},
    {0x10140, 0x10178, 2},
    {0x10179, 0x10189, 1},
    {0x1018A, 0x1018B, 2},
    {0x1018C, 0x1018E, 1},
    {0x10190, 0x1019C, 1},
    {0x101A0, 0x101A0, 1},
    {0x101D0, 0x101FC, 1},
    {0x102E1, 0x102FB, 2},
    {0x10320, 0x10323, 2},
    {0x10341, 0x10341, 2},
    {0x1034A, 0x1034A, 2},
    {0x1039F, 0x1039F, 1},
    {0x103D0, 0x103D0, 1},
    {0x103D1, 0x103D5, 2},
    {0x104A0, 0x104A9, 2},
    {0x1056F, 0x1056F, 1},
    {0x10857, 0x10857, 1},
    {0x10858, 0x1085F, 2},
    {0x10877, 0x10878, 1},
    {0x10879, 0x1087F, 2},
    {0x108A7, 0x108AF, 2},
    {0x108FB, 0x108FF, 2},
    {0x10916, 0x1091B, 2},
    {0x1091F, 0x1091F, 1},
    {0x1093F, 0x1093F, 1},
    {0x109BC, 0x109BD, 2},
    {0x109C0, 0x109CF, 2},
    {0x109D2, 0x109FF, 2},
    {0x10A40, 0x10A48, 2},
    {0x10A50, 0x10A58, 1},
    {0x10A7D, 0x10A7E, 2},
    {0x10A7F, 0x10A7F, 1},
    {0x10A9D, 0x10A9F, 2},
    {0x10AC8, 0x10AC8, 1},
    {0x10AEB, 0x10AEF, 2},
    {0x10AF0, 0x10AF6, 1},
    {0x10B39, 0x10B3F, 1},
    {0x10B58, 0x10B5F, 2},
    {0x10B78, 0x10B7F, 2},
    {0x10B99, 0x10B9C, 1},
    {0x10BA9, 0x10BAF, 2},
    {0x10CFA, 0x10CFF, 2},
    {0x10D30, 0x10D39, 2},
    {0x10E60, 0x10E7E, 2},
    {0x10EAD, 0x10EAD, 1},
    {0x10F1D, 0x10F26, 2},
    {0x10F51, 0x10F54, 2},
    {0x10F55, 0x10F59, 1},
    {0x10FC5, 0x10FCB, 2},
    {0x11047, 0x1104D, 1},
    {0x11052, 0x1106F, 2},
    {0x110BB, 0x110BC, 1},
    {0x110BE, 0x110C1, 1},
    {0x110F0, 0x110F9, 2},
    {0x11136, 0x1113F, 2},
    {0x11140, 0x11143, 1},
    {0x11174, 0x11175, 1},
    {0x111C5, 0x111C8, 1},
    {0x111CD, 0x111CD, 1},
    {0x111D0, 0x111D9, 2},
    {0x111DB, 0x111DB, 1},
    {0x111DD, 0x111DF, 1},
    {0x111E1, 0x111F4, 2},
    {0x11238, 0x1123D, 1},
    {0x112A9, 0x112A9, 1},
    {0x112F0, 0x112F9, 2},
    {0x1144B, 0x1144F, 1},
    {0x11450, 0x11459, 2},
    {0x1145A, 0x1145B, 1},
    {0x1145D, 0x1145D, 1},
    {0x114C6, 0x114C6, 1},
    {0x114D0, 0x114D9, 2},
    {0x115C1, 0x115D7, 1},
    {0x11641, 0x11643, 1},
    {0x11650, 0x11659, 2},
    {0x11660, 0x1166C, 1},
    {0x116C0, 0x116C9, 2},
    {0x11730, 0x1173B, 2},
    {0x1173C, 0x1173F, 1},
    {0x1183B, 0x1183B, 1},
    {0x118E0, 0x118F2, 2},
    {0x11944, 0x11946, 1},
    {0x11950, 0x11959, 2},
    {0x119E2, 0x119E2, 1},
    {0x11A3F, 0x11A46, 1},
    {0x11A9A, 0x11A9C, 1},
    {0x11A9E, 0x11AA2, 1},
    {0x11C41, 0x11C45, 1},
    {0x11C50, 0x11C6C, 2},
    {0x11C70, 0x11C71, 1},
    {0x11D50, 0x11D59, 2},
    {0x11DA0, 0x11DA9, 2},
    {0x11EF7, 0x11EF8, 1},
    {0x11FC0, 0x11FD4, 2},
    {0x11FD5, 0x11FF1, 1},
    {0x11FFF, 0x11FFF, 1},
    {0x12400, 0x1246E, 2},
    {0x12470, 0x12474, 1},
    {0x16A60, 0x16A69, 2},
    {0x16A6E, 0x16A6F, 1},
    {0x16AF5, 0x16AF5, 1},
    {0x16B37, 0x16B3F, 1},
    {0x16B44, 0x16B45, 1},
    {0x16B50, 0x16B59, 2},
    {0x16B5B, 0x16B61, 2},
    {0x16E80, 0x16E96, 2},
    {0x16E97, 0x16E9A, 1},
    {0x16FE2, 0x16FE2, 1},
    {0x1BC9C, 0x1BC9C, 1},
    {0x1BC9F, 0x1BC9F, 1},
    {0x1D000, 0x1D0F5, 1},
    {0x1D100, 0x1D126, 1},
    {0x1D129, 0x1D164, 1},
    {0x1D16A, 0x1D16C, 1},
    {0x1D183, 0x1D184, 1},
    {0x1D18C, 0x1D1A9, 1},
    {0x1D1AE, 0x1D1E8, 1},
    {0x1D200, 0x1D241, 1},
    {0x1D245, 0x1D245, 1},
    {0x1D2E0, 0x1D2F3, 2},
    {0x1D300, 0x1D356, 1},
    {0x1D360, 0x1D378, 2},
    {0x1D6C1, 0x1D6C1, 1},
    {0x1D6DB, 0x1D6DB, 1},
    {0x1D6FB, 0x1D6FB, 1},
    {0x1D715, 0x1D715, 1},
    {0x1D735, 0x1D735, 1},
    {0x1D74F, 0x1D74F, 1},
    {0x1D76F, 0x1D76F, 1},
    {0x1D789, 0x1D789, 1},
    {0x1D7A9, 0x1D7A9, 1},
    {0x1D7C3, 0x1D7C3, 1},
    {0x1D7CE, 0x1D7FF, 2},
    {0x1D800, 0x1D9FF, 1},
    {0x1DA37, 0x1DA3A, 1},
    {0x1DA6D, 0x1DA74, 1},
    {0x1DA76, 0x1DA83, 1},
    {0x1DA85, 0x1DA8B, 1},
    {0x1E140, 0x1E149, 2},
    {0x1E14F, 0x1E14F, 1},
    {0x1E2F0, 0x1E2F9, 2},
    {0x1E2FF, 0x1E2FF, 1},
    {0x1E8C7, 0x1E8CF, 2},
    {0x1E950, 0x1E959, 2},
    {0x1E95E, 0x1E95F, 1},
    {0x1EC71, 0x1ECAB, 2},
    {0x1ECAC, 0x1ECAC, 1},
    {0x1ECAD, 0x1ECAF, 2},
    {0x1ECB0, 0x1ECB0, 1},
    {0x1ECB1, 0x1ECB4, 2},
    {0x1ED01, 0x1ED2D, 2},
    {0x1ED2E, 0x1ED2E, 1},
    {0x1ED2F, 0x1ED3D, 2},
    {0x1EEF0, 0x1EEF1, 1},
    {0x1F000, 0x1F02B, 1},
    {0x1F030, 0x1F093, 1},
    {0x1F0A0, 0x1F0AE, 1},
    {0x1F0B1, 0x1F0BF, 1},
    {0x1F0C1, 0x1F0CF, 1},
    {0x1F0D1, 0x1F0F5, 1},
    {0x1F100, 0x1F10C, 2},
    {0x1F10D, 0x1F1AD, 1},
    {0x1F1E6, 0x1F202, 1},
    {0x1F210, 0x1F23B, 1},
    {0x1F240, 0x1F248, 1},
    {0x1F250, 0x1F251, 1},
    {0x1F260, 0x1F265, 1},
    {0x1F300, 0x1F6D7, 1},
    {0x1F6E0, 0x1F6EC, 1},
    {0x1F6F0, 0x1F6FC, 1},
    {0x1F700, 0x1F773, 1},
    {0x1F780, 0x1F7D8, 1},
    {0x1F7E0, 0x1F7EB, 1},
    {0x1F800, 0x1F80B, 1},
    {0x1F810, 0x1F847, 1},
    {0x1F850, 0x1F859, 1},
    {0x1F860, 0x1F887, 1},
    {0x1F890, 0x1F8AD, 1},
    {0x1F8B0, 0x1F8B1, 1},
    {0x1F900, 0x1F978, 1},
    {0x1F97A, 0x1F9CB, 1},
    {0x1F9CD, 0x1FA53, 1},
    {0x1FA60, 0x1FA6D, 1},
    {0x1FA70, 0x1FA74, 1},
    {0x1FA78, 0x1FA7A, 1},
    {0x1FA80, 0x1FA86, 1},
    {0x1FA90, 0x1FAA8, 1},
    {0x1FAB0, 0x1FAB6, 1},
    {0x1FAC0, 0x1FAC2, 1},
    {0x1FAD0, 0x1FAD6, 1},
    {0x1FB00, 0x1FB92, 1},
    {0x1FB94, 0x1FBCA, 1},
    {0x1FBF0, 0x1FBF9, 2},
}};

struct CaseMapping {
  char32_t upper;
  char32_t lower;
};

inline constexpr std::array<CaseMapping, 443> kLatinLower{{
    {0x00041, 0x00061},
    {0x00042, 0x00062},
    {0x00043, 0x00063},
    {0x00044, 0x00064},
    {0x00045, 0x00065},
    {0x00046, 0x00066},
    {0x00047, 0x00067},
    {0x00048, 0x00068},
    {0x00049, 0x00069},
    {0x0004A, 0x0006A},
    {0x0004B, 0x0006B},
    {0x0004C, 0x0006C},
    {0x0004D, 0x0006D},
    {0x0004E, 0x0006E},
    {0x0004F, 0x0006F},
    {0x00050, 0x00070},
    {0x00051, 0x00071},
    {0x00052, 0x00072},
    {0x00053, 0x00073},
    {0x00054, 0x00074},
    {0x00055, 0x00075},
    {0x00056, 0x00076},
    {0x00057, 0x00077},
    {0x00058, 0x00078},
    {0x00059, 0x00079},
    {0x0005A, 0x0007A},
    {0x000C0, 0x000E0},
    {0x000C1, 0x000E1},
    {0x000C2, 0x000E2},
    {0x000C3, 0x000E3},
    {0x000C4, 0x000E4},
    {0x000C5, 0x000E5},
    {0x000C6, 0x000E6},
    {0x000C7, 0x000E7},
    {0x000C8, 0x000E8},
    {0x000C9, 0x000E9},
    {0x000CA, 0x000EA},
    {0x000CB, 0x000EB},
    {0x000CC, 0x000EC},
    {0x000CD, 0x000ED},
    {0x000CE, 0x000EE},
    {0x000CF, 0x000EF},
    {0x000D0, 0x000F0},
    {0x000D1, 0x000F1},
    {0x000D2, 0x000F2},
    {0x000D3, 0x000F3},
    {0x000D4, 0x000F4},
    {0x000D5, 0x000F5},
    {0x000D6, 0x000F6},
    {0x000D8, 0x000F8},
    {0x000D9, 0x000F9},
    {0x000DA, 0x000FA},
    {0x000DB, 0x000FB},
    {0x000DC, 0x000FC},
    {0x000DD, 0x000FD},
    {0x000DE, 0x000FE},
    {0x00100, 0x00101},
    {0x00102, 0x00103},
    {0x00104, 0x00105},
    {0x00106, 0x00107},
    {0x00108, 0x00109},
    {0x0010A, 0x0010B},
    {0x0010C, 0x0010D},
    {0x0010E, 0x0010F},
    {0x00110, 0x00111},
    {0x00112, 0x00113},
    {0x00114, 0x00115},
    {0x00116, 0x00117},
    {0x00118, 0x00119},
    {0x0011A, 0x0011B},
    {0x0011C, 0x0011D},
    {0x0011E, 0x0011F},
    {0x00120, 0x00121},
    {0x00122, 0x00123},
    {0x00124, 0x00125},
    {0x00126, 0x00127},
    {0x00128, 0x00129},
    {0x0012A, 0x0012B},
    {0x0012C, 0x0012D},
    {0x0012E, 0x0012F},
    {0x00134, 0x00135},
    {0x00136, 0x00137},
    {0x00139, 0x0013A},
    {0x0013B, 0x0013C},
    {0x0013D, 0x0013E},
    {0x0013F, 0x00140},
    {0x00141, 0x00142},
    {0x00143, 0x00144},
    {0x00145, 0x00146},
    {0x00147, 0x00148},
    {0x0014A, 0x0014B},
    {0x0014C, 0x0014D},
    {0x0014E, 0x0014F},
    {0x00150, 0x00151},
    {0x00154, 0x00155},
    {0x00156, 0x00157},
    {0x00158, 0x00159},
    {0x0015A, 0x0015B},
    {0x0015C, 0x0015D},
    {0x0015E, 0x0015F},
    {0x00160, 0x00161},
    {0x00162, 0x00163},
    {0x00164, 0x00165},
    {0x00166, 0x00167},
    {0x00168, 0x00169},
    {0x0016A, 0x0016B},
    {0x0016C, 0x0016D},
    {0x0016E, 0x0016F},
    {0x00170, 0x00171},
    {0x00172, 0x00173},
    {0x00174, 0x00175},
    {0x00176, 0x00177},
    {0x00178, 0x000FF},
    {0x00179, 0x0017A},
    {0x0017B, 0x0017C},
    {0x0017D, 0x0017E},
    {0x00181, 0x00253},
    {0x00182, 0x00183},
    {0x00184, 0x00185},
    {0x00186, 0x00254},
    {0x00187, 0x00188},
    {0x00189, 0x00256},
    {0x0018A, 0x00257},
    {0x0018B, 0x0018C},
    {0x0018E, 0x001DD},
    {0x0018F, 0x00259},
    {0x00190, 0x0025B},
    {0x00191, 0x00192},
    {0x00193, 0x00260},
    {0x00194, 0x00263},
    {0x00196, 0x00269},
    {0x00197, 0x00268},
    {0x00198, 0x00199},
    {0x0019C, 0x0026F},
    {0x0019D, 0x00272},
    {0x0019F, 0x00275},
    {0x001A0, 0x001A1},
    {0x001A2, 0x001A3},
    {0x001A4, 0x001A5},
    {0x001A7, 0x001A8},
    {0x001A9, 0x00283},
    {0x001AC, 0x001AD},
    {0x001AE, 0x00288},
    {0x001AF, 0x001B0},
    {0x001B1, 0x0028A},
    {0x001B2, 0x0028B},
    {0x001B3, 0x001B4},
    {0x001B5, 0x001B6},
    {0x001B7, 0x00292},
    {0x001B8, 0x001B9},
    {0x001BC, 0x001BD},
    {0x001C4, 0x001C6},
    {0x001C5, 0x001C6},
    {0x001C7, 0x001C9},
    {0x001C8, 0x001C9},
    {0x001CA, 0x001CC},
    {0x001CB, 0x001CC},
    {0x001CD, 0x001CE},
    {0x001CF, 0x001D0},
    {0x001D1, 0x001D2},
    {0x001D3, 0x001D4},
    {0x001D5, 0x001D6},
    {0x001D7, 0x001D8},
    {0x001D9, 0x001DA},
    {0x001DB, 0x001DC},
    {0x001DE, 0x001DF},
    {0x001E0, 0x001E1},
    {0x001E2, 0x001E3},
    {0x001E4, 0x001E5},
    {0x001E6, 0x001E7},
    {0x001E8, 0x001E9},
    {0x001EA, 0x001EB},
    {0x001EC, 0x001ED},
    {0x001EE, 0x001EF},
    {0x001F1, 0x001F3},
    {0x001F2, 0x001F3},
    {0x001F4, 0x001F5},
    {0x001F6, 0x00195},
    {0x001F7, 0x001BF},
    {0x001F8, 0x001F9},
    {0x001FA, 0x001FB},
    {0x001FC, 0x001FD},
    {0x001FE, 0x001FF},
    {0x00200, 0x00201},
    {0x00202, 0x00203},
    {0x00204, 0x00205},
    {0x00206, 0x00207},
    {0x00208, 0x00209},
    {0x0020A, 0x0020B},
    {0x0020C, 0x0020D},
    {0x0020E, 0x0020F},
    {0x00210, 0x00211},
    {0x00212, 0x00213},
    {0x00214, 0x00215},
    {0x00216, 0x00217},
    {0x00218, 0x00219},
    {0x0021A, 0x0021B},
    {0x0021C, 0x0021D},
    {0x0021E, 0x0021F},
    {0x00220, 0x0019E},
    {0x00222, 0x00223},
    {0x00224, 0x00225},
    {0x00226, 0x00227},
    {0x00228, 0x00229},
    {0x0022A, 0x0022B},
    {0x0022C, 0x0022D},
    {0x0022E, 0x0022F},
    {0x00230, 0x00231},
    {0x00232, 0x00233},
    {0x0023A, 0x02C65},
    {0x0023B, 0x0023C},
    {0x0023D, 0x0019A},
    {0x0023E, 0x02C66},
    {0x00241, 0x00242},
    {0x00243, 0x00180},
    {0x00244, 0x00289},
    {0x00245, 0x0028C},
    {0x00246, 0x00247},
    {0x00248, 0x00249},
    {0x0024A, 0x0024B},
    {0x0024C, 0x0024D},
    {0x0024E, 0x0024F},
    {0x01E00, 0x01E01},
    {0x01E02, 0x01E03},
    {0x01E04, 0x01E05},
    {0x01E06, 0x01E07},
    {0x01E08, 0x01E09},
    {0x01E0A, 0x01E0B},
    {0x01E0C, 0x01E0D},
    {0x01E0E, 0x01E0F},
    {0x01E10, 0x01E11},
    {0x01E12, 0x01E13},
    {0x01E14, 0x01E15},
    {0x01E16, 0x01E17},
    {0x01E18, 0x01E19},
    {0x01E1A, 0x01E1B},
    {0x01E1C, 0x01E1D},
    {0x01E1E, 0x01E1F},
    {0x01E20, 0x01E21},
    {0x01E22, 0x01E23},
    {0x01E24, 0x01E25},
    {0x01E26, 0x01E27},
    {0x01E28, 0x01E29},
    {0x01E2A, 0x01E2B},
    {0x01E2C, 0x01E2D},
    {0x01E2E, 0x01E2F},
    {0x01E30, 0x01E31},
    {0x01E32, 0x01E33},
    {0x01E34, 0x01E35},
    {0x01E36, 0x01E37},
    {0x01E38, 0x01E39},
    {0x01E3A, 0x01E3B},
    {0x01E3C, 0x01E3D},
    {0x01E3E, 0x01E3F},
    {0x01E40, 0x01E41},
    {0x01E42, 0x01E43},
    {0x01E44, 0x01E45},
    {0x01E46, 0x01E47},
    {0x01E48, 0x01E49},
    {0x01E4A, 0x01E4B},
    {0x01E4C, 0x01E4D},
    {0x01E4E, 0x01E4F},
    {0x01E50, 0x01E51},
    {0x01E52, 0x01E53},
    {0x01E54, 0x01E55},
    {0x01E56, 0x01E57},
    {0x01E58, 0x01E59},
    {0x01E5A, 0x01E5B},
    {0x01E5C, 0x01E5D},
    {0x01E5E, 0x01E5F},
    {0x01E60, 0x01E61},
    {0x01E62, 0x01E63},
    {0x01E64, 0x01E65},
    {0x01E66, 0x01E67},
    {0x01E68, 0x01E69},
    {0x01E6A, 0x01E6B},
    {0x01E6C, 0x01E6D},
    {0x01E6E, 0x01E6F},
    {0x01E70, 0x01E71},
    {0x01E72, 0x01E73},
    {0x01E74, 0x01E75},
    {0x01E76, 0x01E77},
    {0x01E78, 0x01E79},
    {0x01E7A, 0x01E7B},
    {0x01E7C, 0x01E7D},
    {0x01E7E, 0x01E7F},
    {0x01E80, 0x01E81},
    {0x01E82, 0x01E83},
    {0x01E84, 0x01E85},
    {0x01E86, 0x01E87},
    {0x01E88, 0x01E89},
    {0x01E8A, 0x01E8B},
    {0x01E8C, 0x01E8D},
    {0x01E8E, 0x01E8F},
    {0x01E90, 0x01E91},
    {0x01E92, 0x01E93},
    {0x01E94, 0x01E95},
    {0x01E9E, 0x000DF},
    {0x01EA0, 0x01EA1},
    {0x01EA2, 0x01EA3},
    {0x01EA4, 0x01EA5},
    {0x01EA6, 0x01EA7},
    {0x01EA8, 0x01EA9},
    {0x01EAA, 0x01EAB},
    {0x01EAC, 0x01EAD},
    {0x01EAE, 0x01EAF},
    {0x01EB0, 0x01EB1},
    {0x01EB2, 0x01EB3},
    {0x01EB4, 0x01EB5},
    {0x01EB6, 0x01EB7},
    {0x01EB8, 0x01EB9},
    {0x01EBA, 0x01EBB},
    {0x01EBC, 0x01EBD},
    {0x01EBE, 0x01EBF},
    {0x01EC0, 0x01EC1},
    {0x01EC2, 0x01EC3},
    {0x01EC4, 0x01EC5},
    {0x01EC6, 0x01EC7},
    {0x01EC8, 0x01EC9},
    {0x01ECA, 0x01ECB},
    {0x01ECC, 0x01ECD},
    {0x01ECE, 0x01ECF},
    {0x01ED0, 0x01ED1},
    {0x01ED2, 0x01ED3},
    {0x01ED4, 0x01ED5},
    {0x01ED6, 0x01ED7},
    {0x01ED8, 0x01ED9},
    {0x01EDA, 0x01EDB},
    {0x01EDC, 0x01EDD},
    {0x01EDE, 0x01EDF},
    {0x01EE0, 0x01EE1},
    {0x01EE2, 0x01EE3},
    {0x01EE4, 0x01EE5},
    {0x01EE6, 0x01EE7},
    {0x01EE8, 0x01EE9},
    {0x01EEA, 0x01EEB},
    {0x01EEC, 0x01EED},
    {0x01EEE, 0x01EEF},
    {0x01EF0, 0x01EF1},
    {0x01EF2, 0x01EF3},
    {0x01EF4, 0x01EF5},
    {0x01EF6, 0x01EF7},
    {0x01EF8, 0x01EF9},
    {0x01EFA, 0x01EFB},
    {0x01EFC, 0x01EFD},
    {0x01EFE, 0x01EFF},
    {0x02C60, 0x02C61},
    {0x02C62, 0x0026B},
    {0x02C63, 0x01D7D},
    {0x02C64, 0x0027D},
    {0x02C67, 0x02C68},
    {0x02C69, 0x02C6A},
    {0x02C6B, 0x02C6C},
    {0x02C6D, 0x00251},
    {0x02C6E, 0x00271},
    {0x02C6F, 0x00250},
    {0x02C70, 0x00252},
    {0x02C72, 0x02C73},
    {0x02C75, 0x02C76},
    {0x02C7E, 0x0023F},
    {0x02C7F, 0x00240},
    {0x0A722, 0x0A723},
    {0x0A724, 0x0A725},
    {0x0A726, 0x0A727},
    {0x0A728, 0x0A729},
    {0x0A72A, 0x0A72B},
    {0x0A72C, 0x0A72D},
    {0x0A72E, 0x0A72F},
    {0x0A732, 0x0A733},
    {0x0A734, 0x0A735},
    {0x0A736, 0x0A737},
    {0x0A738, 0x0A739},
    {0x0A73A, 0x0A73B},
    {0x0A73C, 0x0A73D},
    {0x0A73E, 0x0A73F},
    {0x0A740, 0x0A741},
    {0x0A742, 0x0A743},
    {0x0A744, 0x0A745},
    {0x0A746, 0x0A747},
    {0x0A748, 0x0A749},
    {0x0A74A, 0x0A74B},
    {0x0A74C, 0x0A74D},
    {0x0A74E, 0x0A74F},
    {0x0A750, 0x0A751},
    {0x0A752, 0x0A753},
    {0x0A754, 0x0A755},
    {0x0A756, 0x0A757},
    {0x0A758, 0x0A759},
    {0x0A75A, 0x0A75B},
    {0x0A75C, 0x0A75D},
    {0x0A75E, 0x0A75F},
    {0x0A760, 0x0A761},
    {0x0A762, 0x0A763},
    {0x0A764, 0x0A765},
    {0x0A766, 0x0A767},
    {0x0A768, 0x0A769},
    {0x0A76A, 0x0A76B},
    {0x0A76C, 0x0A76D},
    {0x0A76E, 0x0A76F},
    {0x0A779, 0x0A77A},
    {0x0A77B, 0x0A77C},
    {0x0A77D, 0x01D79},
    {0x0A77E, 0x0A77F},
    {0x0A780, 0x0A781},
    {0x0A782, 0x0A783},
    {0x0A784, 0x0A785},
    {0x0A786, 0x0A787},
    {0x0A78B, 0x0A78C},
    {0x0A78D, 0x00265},
    {0x0A790, 0x0A791},
    {0x0A792, 0x0A793},
    {0x0A796, 0x0A797},
    {0x0A798, 0x0A799},
    {0x0A79A, 0x0A79B},
    {0x0A79C, 0x0A79D},
    {0x0A79E, 0x0A79F},
    {0x0A7A0, 0x0A7A1},
    {0x0A7A2, 0x0A7A3},
    {0x0A7A4, 0x0A7A5},
    {0x0A7A6, 0x0A7A7},
    {0x0A7A8, 0x0A7A9},
    {0x0A7AA, 0x00266},
    {0x0A7AB, 0x0025C},
    {0x0A7AC, 0x00261},
    {0x0A7AD, 0x0026C},
    {0x0A7AE, 0x0026A},
    {0x0A7B0, 0x0029E},
    {0x0A7B1, 0x00287},
    {0x0A7B2, 0x0029D},
    {0x0A7B3, 0x0AB53},
    {0x0A7B4, 0x0A7B5},
    {0x0A7B6, 0x0A7B7},
    {0x0A7B8, 0x0A7B9},
    {0x0A7BA, 0x0A7BB},
    {0x0A7BC, 0x0A7BD},
    {0x0A7BE, 0x0A7BF},
    {0x0A7C2, 0x0A7C3},
    {0x0A7C4, 0x0A794},
    {0x0A7C5, 0x00282},
    {0x0A7C6, 0x01D8E},
    {0x0A7C7, 0x0A7C8},
    {0x0A7C9, 0x0A7CA},
    {0x0A7F5, 0x0A7F6},
}};

}  // namespace revdetect::detail
