// Generated by scripts/gen_unicode_tables.py (Unicode 13.0.0). Do not edit.
#pragma once

#include <cstdint>

namespace nomen::detail {

struct DecompEntry {
  char32_t cp;
  std::uint16_t offset;
  std::uint8_t length;
};

// NFKD expansions, sorted by codepoint.
inline constexpr DecompEntry kDecompEntries[] = {
  {0x00A0, 0, 1},
  {0x00A8, 1, 2},
  {0x00AA, 3, 1},
  {0x00AF, 4, 2},
  {0x00B2, 6, 1},
  {0x00B3, 7, 1},
  {0x00B4, 8, 2},
  {0x00B5, 10, 1},
  {0x00B8, 11, 2},
  {0x00B9, 13, 1},
  {0x00BA, 14, 1},
  {0x00BC, 15, 3},
  {0x00BD, 18, 3},
  {0x00BE, 21, 3},
  {0x00C0, 24, 2},
  {0x00C1, 26, 2},
  {0x00C2, 28, 2},
  {0x00C3, 30, 2},
  {0x00C4, 32, 2},
  {0x00C5, 34, 2},
  {0x00C7, 36, 2},
  {0x00C8, 38, 2},
  {0x00C9, 40, 2},
  {0x00CA, 42, 2},
  {0x00CB, 44, 2},
  {0x00CC, 46, 2},
  {0x00CD, 48, 2},
  {0x00CE, 50, 2},
  {0x00CF, 52, 2},
  {0x00D1, 54, 2},
  {0x00D2, 56, 2},
  {0x00D3, 58, 2},
  {0x00D4, 60, 2},
  {0x00D5, 62, 2},
  {0x00D6, 64, 2},
  {0x00D9, 66, 2},
  {0x00DA, 68, 2},
  {0x00DB, 70, 2},
  {0x00DC, 72, 2},
  {0x00DD, 74, 2},
  {0x00E0, 76, 2},
  {0x00E1, 78, 2},
  {0x00E2, 80, 2},
  {0x00E3, 82, 2},
  {0x00E4, 84, 2},
  {0x00E5, 86, 2},
  {0x00E7, 88, 2},
  {0x00E8, 90, 2},
  {0x00E9, 92, 2},
  {0x00EA, 94, 2},
  {0x00EB, 96, 2},
  {0x00EC, 98, 2},
  {0x00ED, 100, 2},
  {0x00EE, 102, 2},
  {0x00EF, 104, 2},
  {0x00F1, 106, 2},
  {0x00F2, 108, 2},
  {0x00F3, 110, 2},
  {0x00F4, 112, 2},
  {0x00F5, 114, 2},
  {0x00F6, 116, 2},
  {0x00F9, 118, 2},
  {0x00FA, 120, 2},
  {0x00FB, 122, 2},
  {0x00FC, 124, 2},
  {0x00FD, 126, 2},
  {0x00FF, 128, 2},
  {0x0100, 130, 2},
  {0x0101, 132, 2},
  {0x0102, 134, 2},
  {0x0103, 136, 2},
  {0x0104, 138, 2},
  {0x0105, 140, 2},
  {0x0106, 142, 2},
  {0x0107, 144, 2},
  {0x0108, 146, 2},
  {0x0109, 148, 2},
  {0x010A, 150, 2},
  {0x010B, 152, 2},
  {0x010C, 154, 2},
  {0x010D, 156, 2},
  {0x010E, 158, 2},
  {0x010F, 160, 2},
  {0x0112, 162, 2},
  {0x0113, 164, 2},
  {0x0114, 166, 2},
  {0x0115, 168, 2},
  {0x0116, 170, 2},
  {0x0117, 172, 2},
  {0x0118, 174, 2},
  {0x0119, 176, 2},
  {0x011A, 178, 2},
  {0x011B, 180, 2},
  {0x011C, 182, 2},
  {0x011D, 184, 2},
  {0x011E, 186, 2},
  {0x011F, 188, 2},
  {0x0120, 190, 2},
  {0x0121, 192, 2},
  {0x0122, 194, 2},
  {0x0123, 196, 2},
  {0x0124, 198, 2},
  {0x0125, 200, 2},
  {0x0128, 202, 2},
  {0x0129, 204, 2},
  {0x012A, 206, 2},
  {0x012B, 208, 2},
  {0x012C, 210, 2},
  {0x012D, 212, 2},
  {0x012E, 214, 2},
  {0x012F, 216, 2},
  {0x0130, 218, 2},
  {0x0132, 220, 2},
  {0x0133, 222, 2},
  {0x0134, 224, 2},
  {0x0135, 226, 2},
  {0x0136, 228, 2},
  {0x0137, 230, 2},
  {0x0139, 232, 2},
  {0x013A, 234, 2},
  {0x013B, 236, 2},
  {0x013C, 238, 2},
  {0x013D, 240, 2},
  {0x013E, 242, 2},
  {0x013F, 244, 2},
  {0x0140, 246, 2},
  {0x0143, 248, 2},
  {0x0144, 250, 2},
  {0x0145, 252, 2},
  {0x0146, 254, 2},
  {0x0147, 256, 2},
  {0x0148, 258, 2},
  {0x0149, 260, 2},
  {0x014C, 262, 2},
  {0x014D, 264, 2},
  {0x014E, 266, 2},
  {0x014F, 268, 2},
  {0x0150, 270, 2},
  {0x0151, 272, 2},
  {0x0154, 274, 2},
  {0x0155, 276, 2},
  {0x0156, 278, 2},
  {0x0157, 280, 2},
  {0x0158, 282, 2},
  {0x0159, 284, 2},
  {0x015A, 286, 2},
  {0x015B, 288, 2},
  {0x015C, 290, 2},
  {0x015D, 292, 2},
  {0x015E, 294, 2},
  {0x015F, 296, 2},
  {0x0160, 298, 2},
  {0x0161, 300, 2},
  {0x0162, 302, 2},
  {0x0163, 304, 2},
  {0x0164, 306, 2},
  {0x0165, 308, 2},
  {0x0168, 310, 2},
  {0x0169, 312, 2},
  {0x016A, 314, 2},
  {0x016B, 316, 2},
  {0x016C, 318, 2},
  {0x016D, 320, 2},
  {0x016E, 322, 2},
  {0x016F, 324, 2},
  {0x0170, 326, 2},
  {0x0171, 328, 2},
  {0x0172, 330, 2},
  {0x0173, 332, 2},
  {0x0174, 334, 2},
  {0x0175, 336, 2},
  {0x0176, 338, 2},
  {0x0177, 340, 2},
  {0x0178, 342, 2},
  {0x0179, 344, 2},
  {0x017A, 346, 2},
  {0x017B, 348, 2},
  {0x017C, 350, 2},
  {0x017D, 352, 2},
  {0x017E, 354, 2},
  {0x017F, 356, 1},
  {0x01A0, 357, 2},
  {0x01A1, 359, 2},
  {0x01AF, 361, 2},
  {0x01B0, 363, 2},
  {0x01C4, 365, 3},
  {0x01C5, 368, 3},
  {0x01C6, 371, 3},
  {0x01C7, 374, 2},
  {0x01C8, 376, 2},
  {0x01C9, 378, 2},
  {0x01CA, 380, 2},
  {0x01CB, 382, 2},
  {0x01CC, 384, 2},
  {0x01CD, 386, 2},
  {0x01CE, 388, 2},
  {0x01CF, 390, 2},
  {0x01D0, 392, 2},
  {0x01D1, 394, 2},
  {0x01D2, 396, 2},
  {0x01D3, 398, 2},
  {0x01D4, 400, 2},
  {0x01D5, 402, 3},
  {0x01D6, 405, 3},
  {0x01D7, 408, 3},
  {0x01D8, 411, 3},
  {0x01D9, 414, 3},
  {0x01DA, 417, 3},
  {0x01DB, 420, 3},
  {0x01DC, 423, 3},
  {0x01DE, 426, 3},
  {0x01DF, 429, 3},
  {0x01E0, 432, 3},
  {0x01E1, 435, 3},
  {0x01E2, 438, 2},
  {0x01E3, 440, 2},
  {0x01E6, 442, 2},
  {0x01E7, 444, 2},
  {0x01E8, 446, 2},
  {0x01E9, 448, 2},
  {0x01EA, 450, 2},
  {0x01EB, 452, 2},
  {0x01EC, 454, 3},
  {0x01ED, 457, 3},
  {0x01EE, 460, 2},
  {0x01EF, 462, 2},
  {0x01F0, 464, 2},
  {0x01F1, 466, 2},
  {0x01F2, 468, 2},
  {0x01F3, 470, 2},
  {0x01F4, 472, 2},
  {0x01F5, 474, 2},
  {0x01F8, 476, 2},
  {0x01F9, 478, 2},
  {0x01FA, 480, 3},
  {0x01FB, 483, 3},
  {0x01FC, 486, 2},
  {0x01FD, 488, 2},
  {0x01FE, 490, 2},
  {0x01FF, 492, 2},
  {0x0200, 494, 2},
  {0x0201, 496, 2},
  {0x0202, 498, 2},
  {0x0203, 500, 2},
  {0x0204, 502, 2},
  {0x0205, 504, 2},
  {0x0206, 506, 2},
  {0x0207, 508, 2},
  {0x0208, 510, 2},
  {0x0209, 512, 2},
  {0x020A, 514, 2},
  {0x020B, 516, 2},
  {0x020C, 518, 2},
  {0x020D, 520, 2},
  {0x020E, 522, 2},
  {0x020F, 524, 2},
  {0x0210, 526, 2},
  {0x0211, 528, 2},
  {0x0212, 530, 2},
  {0x0213, 532, 2},
  {0x0214, 534, 2},
  {0x0215, 536, 2},
  {0x0216, 538, 2},
  {0x0217, 540, 2},
  {0x0218, 542, 2},
  {0x0219, 544, 2},
  {0x021A, 546, 2},
  {0x021B, 548, 2},
  {0x021E, 550, 2},
  {0x021F, 552, 2},
  {0x0226, 554, 2},
  {0x0227, 556, 2},
  {0x0228, 558, 2},
  {0x0229, 560, 2},
  {0x022A, 562, 3},
  {0x022B, 565, 3},
  {0x022C, 568, 3},
  {0x022D, 571, 3},
  {0x022E, 574, 2},
  {0x022F, 576, 2},
  {0x0230, 578, 3},
  {0x0231, 581, 3},
  {0x0232, 584, 2},
  {0x0233, 586, 2},
  {0x02B0, 588, 1},
  {0x02B1, 589, 1},
  {0x02B2, 590, 1},
  {0x02B3, 591, 1},
  {0x02B4, 592, 1},
  {0x02B5, 593, 1},
  {0x02B6, 594, 1},
  {0x02B7, 595, 1},
  {0x02B8, 596, 1},
  {0x02D8, 597, 2},
  {0x02D9, 599, 2},
  {0x02DA, 601, 2},
  {0x02DB, 603, 2},
  {0x02DC, 605, 2},
  {0x02DD, 607, 2},
  {0x02E0, 609, 1},
  {0x02E1, 610, 1},
  {0x02E2, 611, 1},
  {0x02E3, 612, 1},
  {0x02E4, 613, 1},
  {0x0340, 614, 1},
  {0x0341, 615, 1},
  {0x0343, 616, 1},
  {0x0344, 617, 2},
  {0x0374, 619, 1},
  {0x037A, 620, 2},
  {0x037E, 622, 1},
  {0x0384, 623, 2},
  {0x0385, 625, 3},
  {0x0386, 628, 2},
  {0x0387, 630, 1},
  {0x0388, 631, 2},
  {0x0389, 633, 2},
  {0x038A, 635, 2},
  {0x038C, 637, 2},
  {0x038E, 639, 2},
  {0x038F, 641, 2},
  {0x0390, 643, 3},
  {0x03AA, 646, 2},
  {0x03AB, 648, 2},
  {0x03AC, 650, 2},
  {0x03AD, 652, 2},
  {0x03AE, 654, 2},
  {0x03AF, 656, 2},
  {0x03B0, 658, 3},
  {0x03CA, 661, 2},
  {0x03CB, 663, 2},
  {0x03CC, 665, 2},
  {0x03CD, 667, 2},
  {0x03CE, 669, 2},
  {0x03D0, 671, 1},
  {0x03D1, 672, 1},
  {0x03D2, 673, 1},
  {0x03D3, 674, 2},
  {0x03D4, 676, 2},
  {0x03D5, 678, 1},
  {0x03D6, 679, 1},
  {0x03F0, 680, 1},
  {0x03F1, 681, 1},
  {0x03F2, 682, 1},
  {0x03F4, 683, 1},
  {0x03F5, 684, 1},
  {0x03F9, 685, 1},
  {0x0400, 686, 2},
  {0x0401, 688, 2},
  {0x0403, 690, 2},
  {0x0407, 692, 2},
  {0x040C, 694, 2},
  {0x040D, 696, 2},
  {0x040E, 698, 2},
  {0x0419, 700, 2},
  {0x0439, 702, 2},
  {0x0450, 704, 2},
  {0x0451, 706, 2},
  {0x0453, 708, 2},
  {0x0457, 710, 2},
  {0x045C, 712, 2},
  {0x045D, 714, 2},
  {0x045E, 716, 2},
  {0x0476, 718, 2},
  {0x0477, 720, 2},
  {0x04C1, 722, 2},
  {0x04C2, 724, 2},
  {0x04D0, 726, 2},
  {0x04D1, 728, 2},
  {0x04D2, 730, 2},
  {0x04D3, 732, 2},
  {0x04D6, 734, 2},
  {0x04D7, 736, 2},
  {0x04DA, 738, 2},
  {0x04DB, 740, 2},
  {0x04DC, 742, 2},
  {0x04DD, 744, 2},
  {0x04DE, 746, 2},
  {0x04DF, 748, 2},
  {0x04E2, 750, 2},
  {0x04E3, 752, 2},
  {0x04E4, 754, 2},
  {0x04E5, 756, 2},
  {0x04E6, 758, 2},
  {0x04E7, 760, 2},
  {0x04EA, 762, 2},
  {0x04EB, 764, 2},
  {0x04EC, 766, 2},
  {0x04ED, 768, 2},
  {0x04EE, 770, 2},
  {0x04EF, 772, 2},
  {0x04F0, 774, 2},
  {0x04F1, 776, 2},
  {0x04F2, 778, 2},
  {0x04F3, 780, 2},
  {0x04F4, 782, 2},
  {0x04F5, 784, 2},
  {0x04F8, 786, 2},
  {0x04F9, 788, 2},
  {0x0587, 790, 2},
  {0x0622, 792, 2},
  {0x0623, 794, 2},
  {0x0624, 796, 2},
  {0x0625, 798, 2},
  {0x0626, 800, 2},
  {0x0675, 802, 2},
  {0x0676, 804, 2},
  {0x0677, 806, 2},
  {0x0678, 808, 2},
  {0x06C0, 810, 2},
  {0x06C2, 812, 2},
  {0x06D3, 814, 2},
  {0x0929, 816, 2},
  {0x0931, 818, 2},
  {0x0934, 820, 2},
  {0x0958, 822, 2},
  {0x0959, 824, 2},
  {0x095A, 826, 2},
  {0x095B, 828, 2},
  {0x095C, 830, 2},
  {0x095D, 832, 2},
  {0x095E, 834, 2},
  {0x095F, 836, 2},
  {0x09CB, 838, 2},
  {0x09CC, 840, 2},
  {0x09DC, 842, 2},
  {0x09DD, 844, 2},
  {0x09DF, 846, 2},
  {0x0A33, 848, 2},
  {0x0A36, 850, 2},
  {0x0A59, 852, 2},
  {0x0A5A, 854, 2},
  {0x0A5B, 856, 2},
  {0x0A5E, 858, 2},
  {0x0B48, 860, 2},
  {0x0B4B, 862, 2},
  {0x0B4C, 864, 2},
  {0x0B5C, 866, 2},
  {0x0B5D, 868, 2},
  {0x0B94, 870, 2},
  {0x0BCA, 872, 2},
  {0x0BCB, 874, 2},
  {0x0BCC, 876, 2},
  {0x0C48, 878, 2},
  {0x0CC0, 880, 2},
  {0x0CC7, 882, 2},
  {0x0CC8, 884, 2},
  {0x0CCA, 886, 2},
  {0x0CCB, 888, 3},
  {0x0D4A, 891, 2},
  {0x0D4B, 893, 2},
  {0x0D4C, 895, 2},
  {0x0DDA, 897, 2},
  {0x0DDC, 899, 2},
  {0x0DDD, 901, 3},
  {0x0DDE, 904, 2},
  {0x0E33, 906, 2},
  {0x0EB3, 908, 2},
  {0x0EDC, 910, 2},
  {0x0EDD, 912, 2},
  {0x0F0C, 914, 1},
  {0x0F43, 915, 2},
  {0x0F4D, 917, 2},
  {0x0F52, 919, 2},
  {0x0F57, 921, 2},
  {0x0F5C, 923, 2},
  {0x0F69, 925, 2},
  {0x0F73, 927, 2},
  {0x0F75, 929, 2},
  {0x0F76, 931, 2},
  {0x0F77, 933, 3},
  {0x0F78, 936, 2},
  {0x0F79, 938, 3},
  {0x0F81, 941, 2},
  {0x0F93, 943, 2},
  {0x0F9D, 945, 2},
  {0x0FA2, 947, 2},
  {0x0FA7, 949, 2},
  {0x0FAC, 951, 2},
  {0x0FB9, 953, 2},
  {0x1026, 955, 2},
  {0x10FC, 957, 1},
  {0x1B06, 958, 2},
  {0x1B08, 960, 2},
  {0x1B0A, 962, 2},
  {0x1B0C, 964, 2},
  {0x1B0E, 966, 2},
  {0x1B12, 968, 2},
  {0x1B3B, 970, 2},
  {0x1B3D, 972, 2},
  {0x1B40, 974, 2},
  {0x1B41, 976, 2},
  {0x1B43, 978, 2},
  {0x1D2C, 980, 1},
  {0x1D2D, 981, 1},
  {0x1D2E, 982, 1},
  {0x1D30, 983, 1},
  {0x1D31, 984, 1},
  {0x1D32, 985, 1},
  {0x1D33, 986, 1},
  {0x1D34, 987, 1},
  {0x1D35, 988, 1},
  {0x1D36, 989, 1},
  {0x1D37, 990, 1},
  {0x1D38, 991, 1},
  {0x1D39, 992, 1},
  {0x1D3A, 993, 1},
  {0x1D3C, 994, 1},
  {0x1D3D, 995, 1},
  {0x1D3E, 996, 1},
  {0x1D3F, 997, 1},
  {0x1D40, 998, 1},
  {0x1D41, 999, 1},
  {0x1D42, 1000, 1},
  {0x1D43, 1001, 1},
  {0x1D44, 1002, 1},
  {0x1D45, 1003, 1},
  {0x1D46, 1004, 1},
  {0x1D47, 1005, 1},
  {0x1D48, 1006, 1},
  {0x1D49, 1007, 1},
  {0x1D4A, 1008, 1},
  {0x1D4B, 1009, 1},
  {0x1D4C, 1010, 1},
  {0x1D4D, 1011, 1},
  {0x1D4F, 1012, 1},
  {0x1D50, 1013, 1},
  {0x1D51, 1014, 1},
  {0x1D52, 1015, 1},
  {0x1D53, 1016, 1},
  {0x1D54, 1017, 1},
  {0x1D55, 1018, 1},
  {0x1D56, 1019, 1},
  {0x1D57, 1020, 1},
  {0x1D58, 1021, 1},
  {0x1D59, 1022, 1},
  {0x1D5A, 1023, 1},
  {0x1D5B, 1024, 1},
  {0x1D5C, 1025, 1},
  {0x1D5D, 1026, 1},
  {0x1D5E, 1027, 1},
  {0x1D5F, 1028, 1},
  {0x1D60, 1029, 1},
  {0x1D61, 1030, 1},
  {0x1D62, 1031, 1},
  {0x1D63, 1032, 1},
  {0x1D64, 1033, 1},
  {0x1D65, 1034, 1},
  {0x1D66, 1035, 1},
  {0x1D67, 1036, 1},
  {0x1D68, 1037, 1},
  {0x1D69, 1038, 1},
  {0x1D6A, 1039, 1},
  {0x1D78, 1040, 1},
  {0x1D9B, 1041, 1},
  {0x1D9C, 1042, 1},
  {0x1D9D, 1043, 1},
  {0x1D9E, 1044, 1},
  {0x1D9F, 1045, 1},
  {0x1DA0, 1046, 1},
  {0x1DA1, 1047, 1},
  {0x1DA2, 1048, 1},
  {0x1DA3, 1049, 1},
  {0x1DA4, 1050, 1},
  {0x1DA5, 1051, 1},
  {0x1DA6, 1052, 1},
  {0x1DA7, 1053, 1},
  {0x1DA8, 1054, 1},
  {0x1DA9, 1055, 1},
  {0x1DAA, 1056, 1},
  {0x1DAB, 1057, 1},
  {0x1DAC, 1058, 1},
  {0x1DAD, 1059, 1},
  {0x1DAE, 1060, 1},
  {0x1DAF, 1061, 1},
  {0x1DB0, 1062, 1},
  {0x1DB1, 1063, 1},
  {0x1DB2, 1064, 1},
  {0x1DB3, 1065, 1},
  {0x1DB4, 1066, 1},
  {0x1DB5, 1067, 1},
  {0x1DB6, 1068, 1},
  {0x1DB7, 1069, 1},
  {0x1DB8, 1070, 1},
  {0x1DB9, 1071, 1},
  {0x1DBA, 1072, 1},
  {0x1DBB, 1073, 1},
  {0x1DBC, 1074, 1},
  {0x1DBD, 1075, 1},
  {0x1DBE, 1076, 1},
  {0x1DBF, 1077, 1},
  {0x1E00, 1078, 2},
  {0x1E01, 1080, 2},
  {0x1E02, 1082, 2},
  {0x1E03, 1084, 2},
  {0x1E04, 1086, 2},
  {0x1E05, 1088, 2},
  {0x1E06, 1090, 2},
  {0x1E07, 1092, 2},
  {0x1E08, 1094, 3},
  {0x1E09, 1097, 3},
  {0x1E0A, 1100, 2},
  {0x1E0B, 1102, 2},
  {0x1E0C, 1104, 2},
  {0x1E0D, 1106, 2},
  {0x1E0E, 1108, 2},
  {0x1E0F, 1110, 2},
  {0x1E10, 1112, 2},
  {0x1E11, 1114, 2},
  {0x1E12, 1116, 2},
  {0x1E13, 1118, 2},
  {0x1E14, 1120, 3},
  {0x1E15, 1123, 3},
  {0x1E16, 1126, 3},
  {0x1E17, 1129, 3},
  {0x1E18, 1132, 2},
  {0x1E19, 1134, 2},
  {0x1E1A, 1136, 2},
  {0x1E1B, 1138, 2},
  {0x1E1C, 1140, 3},
  {0x1E1D, 1143, 3},
  {0x1E1E, 1146, 2},
  {0x1E1F, 1148, 2},
  {0x1E20, 1150, 2},
  {0x1E21, 1152, 2},
  {0x1E22, 1154, 2},
  {0x1E23, 1156, 2},
  {0x1E24, 1158, 2},
  {0x1E25, 1160, 2},
  {0x1E26, 1162, 2},
  {0x1E27, 1164, 2},
  {0x1E28, 1166, 2},
  {0x1E29, 1168, 2},
  {0x1E2A, 1170, 2},
  {0x1E2B, 1172, 2},
  {0x1E2C, 1174, 2},
  {0x1E2D, 1176, 2},
  {0x1E2E, 1178, 3},
  {0x1E2F, 1181, 3},
  {0x1E30, 1184, 2},
  {0x1E31, 1186, 2},
  {0x1E32, 1188, 2},
  {0x1E33, 1190, 2},
  {0x1E34, 1192, 2},
  {0x1E35, 1194, 2},
  {0x1E36, 1196, 2},
  {0x1E37, 1198, 2},
  {0x1E38, 1200, 3},
  {0x1E39, 1203, 3},
  {0x1E3A, 1206, 2},
  {0x1E3B, 1208, 2},
  {0x1E3C, 1210, 2},
  {0x1E3D, 1212, 2},
  {0x1E3E, 1214, 2},
  {0x1E3F, 1216, 2},
  {0x1E40, 1218, 2},
  {0x1E41, 1220, 2},
  {0x1E42, 1222, 2},
  {0x1E43, 1224, 2},
  {0x1E44, 1226, 2},
  {0x1E45, 1228, 2},
  {0x1E46, 1230, 2},
  {0x1E47, 1232, 2},
  {0x1E48, 1234, 2},
  {0x1E49, 1236, 2},
  {0x1E4A, 1238, 2},
  {0x1E4B, 1240, 2},
  {0x1E4C, 1242, 3},
  {0x1E4D, 1245, 3},
  {0x1E4E, 1248, 3},
  {0x1E4F, 1251, 3},
  {0x1E50, 1254, 3},
  {0x1E51, 1257, 3},
  {0x1E52, 1260, 3},
  {0x1E53, 1263, 3},
  {0x1E54, 1266, 2},
  {0x1E55, 1268, 2},
  {0x1E56, 1270, 2},
  {0x1E57, 1272, 2},
  {0x1E58, 1274, 2},
  {0x1E59, 1276, 2},
  {0x1E5A, 1278, 2},
  {0x1E5B, 1280, 2},
  {0x1E5C, 1282, 3},
  {0x1E5D, 1285, 3},
  {0x1E5E, 1288, 2},
  {0x1E5F, 1290, 2},
  {0x1E60, 1292, 2},
  {0x1E61, 1294, 2},
  {0x1E62, 1296, 2},
  {0x1E63, 1298, 2},
  {0x1E64, 1300, 3},
  {0x1E65, 1303, 3},
  {0x1E66, 1306, 3},
  {0x1E67, 1309, 3},
  {0x1E68, 1312, 3},
  {0x1E69, 1315, 3},
  {0x1E6A, 1318, 2},
  {0x1E6B, 1320, 2},
  {0x1E6C, 1322, 2},
  {0x1E6D, 1324, 2},
  {0x1E6E, 1326, 2},
  {0x1E6F, 1328, 2},
  {0x1E70, 1330, 2},
  {0x1E71, 1332, 2},
  {0x1E72, 1334, 2},
  {0x1E73, 1336, 2},
  {0x1E74, 1338, 2},
  {0x1E75, 1340, 2},
  {0x1E76, 1342, 2},
  {0x1E77, 1344, 2},
  {0x1E78, 1346, 3},
  {0x1E79, 1349, 3},
  {0x1E7A, 1352, 3},
  {0x1E7B, 1355, 3},
  {0x1E7C, 1358, 2},
  {0x1E7D, 1360, 2},
  {0x1E7E, 1362, 2},
  {0x1E7F, 1364, 2},
  {0x1E80, 1366, 2},
  {0x1E81, 1368, 2},
  {0x1E82, 1370, 2},
  {0x1E83, 1372, 2},
  {0x1E84, 1374, 2},
  {0x1E85, 1376, 2},
  {0x1E86, 1378, 2},
  {0x1E87, 1380, 2},
  {0x1E88, 1382, 2},
  {0x1E89, 1384, 2},
  {0x1E8A, 1386, 2},
  {0x1E8B, 1388, 2},
  {0x1E8C, 1390, 2},
  {0x1E8D, 1392, 2},
  {0x1E8E, 1394, 2},
  {0x1E8F, 1396, 2},
  {0x1E90, 1398, 2},
  {0x1E91, 1400, 2},
  {0x1E92, 1402, 2},
  {0x1E93, 1404, 2},
  {0x1E94, 1406, 2},
  {0x1E95, 1408, 2},
  {0x1E96, 1410, 2},
  {0x1E97, 1412, 2},
  {0x1E98, 1414, 2},
  {0x1E99, 1416, 2},
  {0x1E9A, 1418, 2},
  {0x1E9B, 1420, 2},
  {0x1EA0, 1422, 2},
  {0x1EA1, 1424, 2},
  {0x1EA2, 1426, 2},
  {0x1EA3, 1428, 2},
  {0x1EA4, 1430, 3},
  {0x1EA5, 1433, 3},
  {0x1EA6, 1436, 3},
  {0x1EA7, 1439, 3},
  {0x1EA8, 1442, 3},
  {0x1EA9, 1445, 3},
  {0x1EAA, 1448, 3},
  {0x1EAB, 1451, 3},
  {0x1EAC, 1454, 3},
  {0x1EAD, 1457, 3},
  {0x1EAE, 1460, 3},
  {0x1EAF, 1463, 3},
  {0x1EB0, 1466, 3},
  {0x1EB1, 1469, 3},
  {0x1EB2, 1472, 3},
  {0x1EB3, 1475, 3},
  {0x1EB4, 1478, 3},
  {0x1EB5, 1481, 3},
  {0x1EB6, 1484, 3},
  {0x1EB7, 1487, 3},
  {0x1EB8, 1490, 2},
  {0x1EB9, 1492, 2},
  {0x1EBA, 1494, 2},
  {0x1EBB, 1496, 2},
  {0x1EBC, 1498, 2},
  {0x1EBD, 1500, 2},
  {0x1EBE, 1502, 3},
  {0x1EBF, 1505, 3},
  {0x1EC0, 1508, 3},
  {0x1EC1, 1511, 3},
  {0x1EC2, 1514, 3},
  {0x1EC3, 1517, 3},
  {0x1EC4, 1520, 3},
  {0x1EC5, 1523, 3},
  {0x1EC6, 1526, 3},
  {0x1EC7, 1529, 3},
  {0x1EC8, 1532, 2},
  {0x1EC9, 1534, 2},
  {0x1ECA, 1536, 2},
  {0x1ECB, 1538, 2},
  {0x1ECC, 1540, 2},
  {0x1ECD, 1542, 2},
  {0x1ECE, 1544, 2},
  {0x1ECF, 1546, 2},
  {0x1ED0, 1548, 3},
  {0x1ED1, 1551, 3},
  {0x1ED2, 1554, 3},
  {0x1ED3, 1557, 3},
  {0x1ED4, 1560, 3},
  {0x1ED5, 1563, 3},
  {0x1ED6, 1566, 3},
  {0x1ED7, 1569, 3},
  {0x1ED8, 1572, 3},
  {0x1ED9, 1575, 3},
  {0x1EDA, 1578, 3},
  {0x1EDB, 1581, 3},
  {0x1EDC, 1584, 3},
  {0x1EDD, 1587, 3},
  {0x1EDE, 1590, 3},
  {0x1EDF, 1593, 3},
  {0x1EE0, 1596, 3},
  {0x1EE1, 1599, 3},
  {0x1EE2, 1602, 3},
  {0x1EE3, 1605, 3},
  {0x1EE4, 1608, 2},
  {0x1EE5, 1610, 2},
  {0x1EE6, 1612, 2},
  {0x1EE7, 1614, 2},
  {0x1EE8, 1616, 3},
  {0x1EE9, 1619, 3},
  {0x1EEA, 1622, 3},
  {0x1EEB, 1625, 3},
  {0x1EEC, 1628, 3},
  {0x1EED, 1631, 3},
  {0x1EEE, 1634, 3},
  {0x1EEF, 1637, 3},
  {0x1EF0, 1640, 3},
  {0x1EF1, 1643, 3},
  {0x1EF2, 1646, 2},
  {0x1EF3, 1648, 2},
  {0x1EF4, 1650, 2},
  {0x1EF5, 1652, 2},
  {0x1EF6, 1654, 2},
  {0x1EF7, 1656, 2},
  {0x1EF8, 1658, 2},
  {0x1EF9, 1660, 2},
  {0x1F00, 1662, 2},
  {0x1F01, 1664, 2},
  {0x1F02, 1666, 3},
  {0x1F03, 1669, 3},
  {0x1F04, 1672, 3},
  {0x1F05, 1675, 3},
  {0x1F06, 1678, 3},
  {0x1F07, 1681, 3},
  {0x1F08, 1684, 2},
  {0x1F09, 1686, 2},
  {0x1F0A, 1688, 3},
  {0x1F0B, 1691, 3},
  {0x1F0C, 1694, 3},
  {0x1F0D, 1697, 3},
  {0x1F0E, 1700, 3},
  {0x1F0F, 1703, 3},
  {0x1F10, 1706, 2},
  {0x1F11, 1708, 2},
  {0x1F12, 1710, 3},
  {0x1F13, 1713, 3},
  {0x1F14, 1716, 3},
  {0x1F15, 1719, 3},
  {0x1F18, 1722, 2},
  {0x1F19, 1724, 2},
  {0x1F1A, 1726, 3},
  {0x1F1B, 1729, 3},
  {0x1F1C, 1732, 3},
  {0x1F1D, 1735, 3},
  {0x1F20, 1738, 2},
  {0x1F21, 1740, 2},
  {0x1F22, 1742, 3},
  {0x1F23, 1745, 3},
  {0x1F24, 1748, 3},
  {0x1F25, 1751, 3},
  {0x1F26, 1754, 3},
  {0x1F27, 1757, 3},
  {0x1F28, 1760, 2},
  {0x1F29, 1762, 2},
  {0x1F2A, 1764, 3},
  {0x1F2B, 1767, 3},
  {0x1F2C, 1770, 3},
  {0x1F2D, 1773, 3},
  {0x1F2E, 1776, 3},
  {0x1F2F, 1779, 3},
  {0x1F30, 1782, 2},
  {0x1F31, 1784, 2},
  {0x1F32, 1786, 3},
  {0x1F33, 1789, 3},
  {0x1F34, 1792, 3},
  {0x1F35, 1795, 3},
  {0x1F36, 1798, 3},
  {0x1F37, 1801, 3},
  {0x1F38, 1804, 2},
  {0x1F39, 1806, 2},
  {0x1F3A, 1808, 3},
  {0x1F3B, 1811, 3},
  {0x1F3C, 1814, 3},
  {0x1F3D, 1817, 3},
  {0x1F3E, 1820, 3},
  {0x1F3F, 1823, 3},
  {0x1F40, 1826, 2},
  {0x1F41, 1828, 2},
  {0x1F42, 1830, 3},
  {0x1F43, 1833, 3},
  {0x1F44, 1836, 3},
  {0x1F45, 1839, 3},
  {0x1F48, 1842, 2},
  {0x1F49, 1844, 2},
  {0x1F4A, 1846, 3},
  {0x1F4B, 1849, 3},
  {0x1F4C, 1852, 3},
  {0x1F4D, 1855, 3},
  {0x1F50, 1858, 2},
  {0x1F51, 1860, 2},
  {0x1F52, 1862, 3},
  {0x1F53, 1865, 3},
  {0x1F54, 1868, 3},
  {0x1F55, 1871, 3},
  {0x1F56, 1874, 3},
  {0x1F57, 1877, 3},
  {0x1F59, 1880, 2},
  {0x1F5B, 1882, 3},
  {0x1F5D, 1885, 3},
  {0x1F5F, 1888, 3},
  {0x1F60, 1891, 2},
  {0x1F61, 1893, 2},
  {0x1F62, 1895, 3},
  {0x1F63, 1898, 3},
  {0x1F64, 1901, 3},
  {0x1F65, 1904, 3},
  {0x1F66, 1907, 3},
  {0x1F67, 1910, 3},
  {0x1F68, 1913, 2},
  {0x1F69, 1915, 2},
  {0x1F6A, 1917, 3},
  {0x1F6B, 1920, 3},
  {0x1F6C, 1923, 3},
  {0x1F6D, 1926, 3},
  {0x1F6E, 1929, 3},
  {0x1F6F, 1932, 3},
  {0x1F70, 1935, 2},
  {0x1F71, 1937, 2},
  {0x1F72, 1939, 2},
  {0x1F73, 1941, 2},
  {0x1F74, 1943, 2},
  {0x1F75, 1945, 2},
  {0x1F76, 1947, 2},
  {0x1F77, 1949, 2},
  {0x1F78, 1951, 2},
  {0x1F79, 1953, 2},
  {0x1F7A, 1955, 2},
  {0x1F7B, 1957, 2},
  {0x1F7C, 1959, 2},
  {0x1F7D, 1961, 2},
  {0x1F80, 1963, 3},
  {0x1F81, 1966, 3},
  {0x1F82, 1969, 4},
  {0x1F83, 1973, 4},
  {0x1F84, 1977, 4},
  {0x1F85, 1981, 4},
  {0x1F86, 1985, 4},
  {0x1F87, 1989, 4},
  {0x1F88, 1993, 3},
  {0x1F89, 1996, 3},
  {0x1F8A, 1999, 4},
  {0x1F8B, 2003, 4},
  {0x1F8C, 2007, 4},
  {0x1F8D, 2011, 4},
  {0x1F8E, 2015, 4},
  {0x1F8F, 2019, 4},
  {0x1F90, 2023, 3},
  {0x1F91, 2026, 3},
  {0x1F92, 2029, 4},
  {0x1F93, 2033, 4},
  {0x1F94, 2037, 4},
  {0x1F95, 2041, 4},
  {0x1F96, 2045, 4},
  {0x1F97, 2049, 4},
  {0x1F98, 2053, 3},
  {0x1F99, 2056, 3},
  {0x1F9A, 2059, 4},
  {0x1F9B, 2063, 4},
  {0x1F9C, 2067, 4},
  {0x1F9D, 2071, 4},
  {0x1F9E, 2075, 4},
  {0x1F9F, 2079, 4},
  {0x1FA0, 2083, 3},
  {0x1FA1, 2086, 3},
  {0x1FA2, 2089, 4},
  {0x1FA3, 2093, 4},
  {0x1FA4, 2097, 4},
  {0x1FA5, 2101, 4},
  {0x1FA6, 2105, 4},
  {0x1FA7, 2109, 4},
  {0x1FA8, 2113, 3},
  {0x1FA9, 2116, 3},
  {0x1FAA, 2119, 4},
  {0x1FAB, 2123, 4},
  {0x1FAC, 2127, 4},
  {0x1FAD, 2131, 4},
  {0x1FAE, 2135, 4},
  {0x1FAF, 2139, 4},
  {0x1FB0, 2143, 2},
  {0x1FB1, 2145, 2},
  {0x1FB2, 2147, 3},
  {0x1FB3, 2150, 2},
  {0x1FB4, 2152, 3},
  {0x1FB6, 2155, 2},
  {0x1FB7, 2157, 3},
  {0x1FB8, 2160, 2},
  {0x1FB9, 2162, 2},
  {0x1FBA, 2164, 2},
  {0x1FBB, 2166, 2},
  {0x1FBC, 2168, 2},
  {0x1FBD, 2170, 2},
  {0x1FBE, 2172, 1},
  {0x1FBF, 2173, 2},
  {0x1FC0, 2175, 2},
  {0x1FC1, 2177, 3},
  {0x1FC2, 2180, 3},
  {0x1FC3, 2183, 2},
  {0x1FC4, 2185, 3},
  {0x1FC6, 2188, 2},
  {0x1FC7, 2190, 3},
  {0x1FC8, 2193, 2},
  {0x1FC9, 2195, 2},
  {0x1FCA, 2197, 2},
  {0x1FCB, 2199, 2},
  {0x1FCC, 2201, 2},
  {0x1FCD, 2203, 3},
  {0x1FCE, 2206, 3},
  {0x1FCF, 2209, 3},
  {0x1FD0, 2212, 2},
  {0x1FD1, 2214, 2},
  {0x1FD2, 2216, 3},
  {0x1FD3, 2219, 3},
  {0x1FD6, 2222, 2},
  {0x1FD7, 2224, 3},
  {0x1FD8, 2227, 2},
  {0x1FD9, 2229, 2},
  {0x1FDA, 2231, 2},
  {0x1FDB, 2233, 2},
  {0x1FDD, 2235, 3},
  {0x1FDE, 2238, 3},
  {0x1FDF, 2241, 3},
  {0x1FE0, 2244, 2},
  {0x1FE1, 2246, 2},
  {0x1FE2, 2248, 3},
  {0x1FE3, 2251, 3},
  {0x1FE4, 2254, 2},
  {0x1FE5, 2256, 2},
  {0x1FE6, 2258, 2},
  {0x1FE7, 2260, 3},
  {0x1FE8, 2263, 2},
  {0x1FE9, 2265, 2},
  {0x1FEA, 2267, 2},
  {0x1FEB, 2269, 2},
  {0x1FEC, 2271, 2},
  {0x1FED, 2273, 3},
  {0x1FEE, 2276, 3},
  {0x1FEF, 2279, 1},
  {0x1FF2, 2280, 3},
  {0x1FF3, 2283, 2},
  {0x1FF4, 2285, 3},
  {0x1FF6, 2288, 2},
  {0x1FF7, 2290, 3},
  {0x1FF8, 2293, 2},
  {0x1FF9, 2295, 2},
  {0x1FFA, 2297, 2},
  {0x1FFB, 2299, 2},
  {0x1FFC, 2301, 2},
  {0x1FFD, 2303, 2},
  {0x1FFE, 2305, 2},
  {0x2000, 2307, 1},
  {0x2001, 2308, 1},
  {0x2002, 2309, 1},
  {0x2003, 2310, 1},
  {0x2004, 2311, 1},
  {0x2005, 2312, 1},
  {0x2006, 2313, 1},
  {0x2007, 2314, 1},
  {0x2008, 2315, 1},
  {0x2009, 2316, 1},
  {0x200A, 2317, 1},
  {0x2011, 2318, 1},
  {0x2017, 2319, 2},
  {0x2024, 2321, 1},
  {0x2025, 2322, 2},
  {0x2026, 2324, 3},
  {0x202F, 2327, 1},
  {0x2033, 2328, 2},
  {0x2034, 2330, 3},
  {0x2036, 2333, 2},
  {0x2037, 2335, 3},
  {0x203C, 2338, 2},
  {0x203E, 2340, 2},
  {0x2047, 2342, 2},
  {0x2048, 2344, 2},
  {0x2049, 2346, 2},
  {0x2057, 2348, 4},
  {0x205F, 2352, 1},
  {0x2070, 2353, 1},
  {0x2071, 2354, 1},
  {0x2074, 2355, 1},
  {0x2075, 2356, 1},
  {0x2076, 2357, 1},
  {0x2077, 2358, 1},
  {0x2078, 2359, 1},
  {0x2079, 2360, 1},
  {0x207A, 2361, 1},
  {0x207B, 2362, 1},
  {0x207C, 2363, 1},
  {0x207D, 2364, 1},
  {0x207E, 2365, 1},
  {0x207F, 2366, 1},
  {0x2080, 2367, 1},
  {0x2081, 2368, 1},
  {0x2082, 2369, 1},
  {0x2083, 2370, 1},
  {0x2084, 2371, 1},
  {0x2085, 2372, 1},
  {0x2086, 2373, 1},
  {0x2087, 2374, 1},
  {0x2088, 2375, 1},
  {0x2089, 2376, 1},
  {0x208A, 2377, 1},
  {0x208B, 2378, 1},
  {0x208C, 2379, 1},
  {0x208D, 2380, 1},
  {0x208E, 2381, 1},
  {0x2090, 2382, 1},
  {0x2091, 2383, 1},
  {0x2092, 2384, 1},
  {0x2093, 2385, 1},
  {0x2094, 2386, 1},
  {0x2095, 2387, 1},
  {0x2096, 2388, 1},
  {0x2097, 2389, 1},
  {0x2098, 2390, 1},
  {0x2099, 2391, 1},
  {0x209A, 2392, 1},
  {0x209B, 2393, 1},
  {0x209C, 2394, 1},
  {0x20A8, 2395, 2},
  {0x2100, 2397, 3},
  {0x2101, 2400, 3},
  {0x2102, 2403, 1},
  {0x2103, 2404, 2},
  {0x2105, 2406, 3},
  {0x2106, 2409, 3},
  {0x2107, 2412, 1},
  {0x2109, 2413, 2},
  {0x210A, 2415, 1},
  {0x210B, 2416, 1},
  {0x210C, 2417, 1},
  {0x210D, 2418, 1},
  {0x210E, 2419, 1},
  {0x210F, 2420, 1},
  {0x2110, 2421, 1},
  {0x2111, 2422, 1},
  {0x2112, 2423, 1},
  {0x2113, 2424, 1},
  {0x2115, 2425, 1},
  {0x2116, 2426, 2},
  {0x2119, 2428, 1},
  {0x211A, 2429, 1},
  {0x211B, 2430, 1},
  {0x211C, 2431, 1},
  {0x211D, 2432, 1},
  {0x2120, 2433, 2},
  {0x2121, 2435, 3},
  {0x2122, 2438, 2},
  {0x2124, 2440, 1},
  {0x2126, 2441, 1},
  {0x2128, 2442, 1},
  {0x212A, 2443, 1},
  {0x212B, 2444, 2},
  {0x212C, 2446, 1},
  {0x212D, 2447, 1},
  {0x212F, 2448, 1},
  {0x2130, 2449, 1},
  {0x2131, 2450, 1},
  {0x2133, 2451, 1},
  {0x2134, 2452, 1},
  {0x2135, 2453, 1},
  {0x2136, 2454, 1},
  {0x2137, 2455, 1},
  {0x2138, 2456, 1},
  {0x2139, 2457, 1},
  {0x213B, 2458, 3},
  {0x213C, 2461, 1},
  {0x213D, 2462, 1},
  {0x213E, 2463, 1},
  {0x213F, 2464, 1},
  {0x2140, 2465, 1},
  {0x2145, 2466, 1},
  {0x2146, 2467, 1},
  {0x2147, 2468, 1},
  {0x2148, 2469, 1},
  {0x2149, 2470, 1},
  {0x2150, 2471, 3},
  {0x2151, 2474, 3},
  {0x2152, 2477, 4},
  {0x2153, 2481, 3},
  {0x2154, 2484, 3},
  {0x2155, 2487, 3},
  {0x2156, 2490, 3},
  {0x2157, 2493, 3},
  {0x2158, 2496, 3},
  {0x2159, 2499, 3},
  {0x215A, 2502, 3},
  {0x215B, 2505, 3},
  {0x215C, 2508, 3},
  {0x215D, 2511, 3},
  {0x215E, 2514, 3},
  {0x215F, 2517, 2},
  {0x2160, 2519, 1},
  {0x2161, 2520, 2},
  {0x2162, 2522, 3},
  {0x2163, 2525, 2},
  {0x2164, 2527, 1},
  {0x2165, 2528, 2},
  {0x2166, 2530, 3},
  {0x2167, 2533, 4},
  {0x2168, 2537, 2},
  {0x2169, 2539, 1},
  {0x216A, 2540, 2},
  {0x216B, 2542, 3},
  {0x216C, 2545, 1},
  {0x216D, 2546, 1},
  {0x216E, 2547, 1},
  {0x216F, 2548, 1},
  {0x2170, 2549, 1},
  {0x2171, 2550, 2},
  {0x2172, 2552, 3},
  {0x2173, 2555, 2},
  {0x2174, 2557, 1},
  {0x2175, 2558, 2},
  {0x2176, 2560, 3},
  {0x2177, 2563, 4},
  {0x2178, 2567, 2},
  {0x2179, 2569, 1},
  {0x217A, 2570, 2},
  {0x217B, 2572, 3},
  {0x217C, 2575, 1},
  {0x217D, 2576, 1},
  {0x217E, 2577, 1},
  {0x217F, 2578, 1},
  {0x2189, 2579, 3},
  {0x219A, 2582, 2},
  {0x219B, 2584, 2},
  {0x21AE, 2586, 2},
  {0x21CD, 2588, 2},
  {0x21CE, 2590, 2},
  {0x21CF, 2592, 2},
  {0x2204, 2594, 2},
  {0x2209, 2596, 2},
  {0x220C, 2598, 2},
  {0x2224, 2600, 2},
  {0x2226, 2602, 2},
  {0x222C, 2604, 2},
  {0x222D, 2606, 3},
  {0x222F, 2609, 2},
  {0x2230, 2611, 3},
  {0x2241, 2614, 2},
  {0x2244, 2616, 2},
  {0x2247, 2618, 2},
  {0x2249, 2620, 2},
  {0x2260, 2622, 2},
  {0x2262, 2624, 2},
  {0x226D, 2626, 2},
  {0x226E, 2628, 2},
  {0x226F, 2630, 2},
  {0x2270, 2632, 2},
  {0x2271, 2634, 2},
  {0x2274, 2636, 2},
  {0x2275, 2638, 2},
  {0x2278, 2640, 2},
  {0x2279, 2642, 2},
  {0x2280, 2644, 2},
  {0x2281, 2646, 2},
  {0x2284, 2648, 2},
  {0x2285, 2650, 2},
  {0x2288, 2652, 2},
  {0x2289, 2654, 2},
  {0x22AC, 2656, 2},
  {0x22AD, 2658, 2},
  {0x22AE, 2660, 2},
  {0x22AF, 2662, 2},
  {0x22E0, 2664, 2},
  {0x22E1, 2666, 2},
  {0x22E2, 2668, 2},
  {0x22E3, 2670, 2},
  {0x22EA, 2672, 2},
  {0x22EB, 2674, 2},
  {0x22EC, 2676, 2},
  {0x22ED, 2678, 2},
  {0x2329, 2680, 1},
  {0x232A, 2681, 1},
  {0x2460, 2682, 1},
  {0x2461, 2683, 1},
  {0x2462, 2684, 1},
  {0x2463, 2685, 1},
  {0x2464, 2686, 1},
  {0x2465, 2687, 1},
  {0x2466, 2688, 1},
  {0x2467, 2689, 1},
  {0x2468, 2690, 1},
  {0x2469, 2691, 2},
  {0x246A, 2693, 2},
  {0x246B, 2695, 2},
  {0x246C, 2697, 2},
  {0x246D, 2699, 2},
  {0x246E, 2701, 2},
  {0x246F, 2703, 2},
  {0x2470, 2705, 2},
  {0x2471, 2707, 2},
  {0x2472, 2709, 2},
  {0x2473, 2711, 2},
  {0x2474, 2713, 3},
  {0x2475, 2716, 3},
  {0x2476, 2719, 3},
  {0x2477, 2722, 3},
  {0x2478, 2725, 3},
  {0x2479, 2728, 3},
  {0x247A, 2731, 3},
  {0x247B, 2734, 3},
  {0x247C, 2737, 3},
  {0x247D, 2740, 4},
  {0x247E, 2744, 4},
  {0x247F, 2748, 4},
  {0x2480, 2752, 4},
  {0x2481, 2756, 4},
  {0x2482, 2760, 4},
  {0x2483, 2764, 4},
  {0x2484, 2768, 4},
  {0x2485, 2772, 4},
  {0x2486, 2776, 4},
  {0x2487, 2780, 4},
  {0x2488, 2784, 2},
  {0x2489, 2786, 2},
  {0x248A, 2788, 2},
  {0x248B, 2790, 2},
  {0x248C, 2792, 2},
  {0x248D, 2794, 2},
  {0x248E, 2796, 2},
  {0x248F, 2798, 2},
  {0x2490, 2800, 2},
  {0x2491, 2802, 3},
  {0x2492, 2805, 3},
  {0x2493, 2808, 3},
  {0x2494, 2811, 3},
  {0x2495, 2814, 3},
  {0x2496, 2817, 3},
  {0x2497, 2820, 3},
  {0x2498, 2823, 3},
  {0x2499, 2826, 3},
  {0x249A, 2829, 3},
  {0x249B, 2832, 3},
  {0x249C, 2835, 3},
  {0x249D, 2838, 3},
  {0x249E, 2841, 3},
  {0x249F, 2844, 3},
  {0x24A0, 2847, 3},
  {0x24A1, 2850, 3},
  {0x24A2, 2853, 3},
  {0x24A3, 2856, 3},
  {0x24A4, 2859, 3},
  {0x24A5, 2862, 3},
  {0x24A6, 2865, 3},
  {0x24A7, 2868, 3},
  {0x24A8, 2871, 3},
  {0x24A9, 2874, 3},
  {0x24AA, 2877, 3},
  {0x24AB, 2880, 3},
  {0x24AC, 2883, 3},
  {0x24AD, 2886, 3},
  {0x24AE, 2889, 3},
  {0x24AF, 2892, 3},
  {0x24B0, 2895, 3},
  {0x24B1, 2898, 3},
  {0x24B2, 2901, 3},
  {0x24B3, 2904, 3},
  {0x24B4, 2907, 3},
  {0x24B5, 2910, 3},
  {0x24B6, 2913, 1},
  {0x24B7, 2914, 1},
  {0x24B8, 2915, 1},
  {0x24B9, 2916, 1},
  {0x24BA, 2917, 1},
  {0x24BB, 2918, 1},
  {0x24BC, 2919, 1},
  {0x24BD, 2920, 1},
  {0x24BE, 2921, 1},
  {0x24BF, 2922, 1},
  {0x24C0, 2923, 1},
  {0x24C1, 2924, 1},
  {0x24C2, 2925, 1},
  {0x24C3, 2926, 1},
  {0x24C4, 2927, 1},
  {0x24C5, 2928, 1},
  {0x24C6, 2929, 1},
  {0x24C7, 2930, 1},
  {0x24C8, 2931, 1},
  {0x24C9, 2932, 1},
  {0x24CA, 2933, 1},
  {0x24CB, 2934, 1},
  {0x24CC, 2935, 1},
  {0x24CD, 2936, 1},
  {0x24CE, 2937, 1},
  {0x24CF, 2938, 1},
  {0x24D0, 2939, 1},
  {0x24D1, 2940, 1},
  {0x24D2, 2941, 1},
  {0x24D3, 2942, 1},
  {0x24D4, 2943, 1},
  {0x24D5, 2944, 1},
  {0x24D6, 2945, 1},
  {0x24D7, 2946, 1},
  {0x24D8, 2947, 1},
  {0x24D9, 2948, 1},
  {0x24DA, 2949, 1},
  {0x24DB, 2950, 1},
  {0x24DC, 2951, 1},
  {0x24DD, 2952, 1},
  {0x24DE, 2953, 1},
  {0x24DF, 2954, 1},
  {0x24E0, 2955, 1},
  {0x24E1, 2956, 1},
  {0x24E2, 2957, 1},
  {0x24E3, 2958, 1},
  {0x24E4, 2959, 1},
  {0x24E5, 2960, 1},
  {0x24E6, 2961, 1},
  {0x24E7, 2962, 1},
  {0x24E8, 2963, 1},
  {0x24E9, 2964, 1},
  {0x24EA, 2965, 1},
  {0x2A0C, 2966, 4},
  {0x2A74, 2970, 3},
  {0x2A75, 2973, 2},
  {0x2A76, 2975, 3},
  {0x2ADC, 2978, 2},
  {0x2C7C, 2980, 1},
  {0x2C7D, 2981, 1},
  {0x2D6F, 2982, 1},
  {0x2E9F, 2983, 1},
  {0x2EF3, 2984, 1},
  {0x2F00, 2985, 1},
  {0x2F01, 2986, 1},
  {0x2F02, 2987, 1},
  {0x2F03, 2988, 1},
  {0x2F04, 2989, 1},
  {0x2F05, 2990, 1},
  {0x2F06, 2991, 1},
  {0x2F07, 2992, 1},
  {0x2F08, 2993, 1},
  {0x2F09, 2994, 1},
  {0x2F0A, 2995, 1},
  {0x2F0B, 2996, 1},
  {0x2F0C, 2997, 1},
  {0x2F0D, 2998, 1},
  {0x2F0E, 2999, 1},
  {0x2F0F, 3000, 1},
  {0x2F10, 3001, 1},
  {0x2F11, 3002, 1},
  {0x2F12, 3003, 1},
  {0x2F13, 3004, 1},
  {0x2F14, 3005, 1},
  {0x2F15, 3006, 1},
  {0x2F16, 3007, 1},
  {0x2F17, 3008, 1},
  {0x2F18, 3009, 1},
  {0x2F19, 3010, 1},
  {0x2F1A, 3011, 1},
  {0x2F1B, 3012, 1},
  {0x2F1C, 3013, 1},
  {0x2F1D, 3014, 1},
  {0x2F1E, 3015, 1},
  {0x2F1F, 3016, 1},
  {0x2F20, 3017, 1},
  {0x2F21, 3018, 1},
  {0x2F22, 3019, 1},
  {0x2F23, 3020, 1},
  {0x2F24, 3021, 1},
  {0x2F25, 3022, 1},
  {0x2F26, 3023, 1},
  {0x2F27, 3024, 1},
  {0x2F28, 3025, 1},
  {0x2F29, 3026, 1},
  {0x2F2A, 3027, 1},
  {0x2F2B, 3028, 1},
  {0x2F2C, 3029, 1},
  {0x2F2D, 3030, 1},
  {0x2F2E, 3031, 1},
  {0x2F2F, 3032, 1},
  {0x2F30, 3033, 1},
  {0x2F31, 3034, 1},
  {0x2F32, 3035, 1},
  {0x2F33, 3036, 1},
  {0x2F34, 3037, 1},
  {0x2F35, 3038, 1},
  {0x2F36, 3039, 1},
  {0x2F37, 3040, 1},
  {0x2F38, 3041, 1},
  {0x2F39, 3042, 1},
  {0x2F3A, 3043, 1},
  {0x2F3B, 3044, 1},
  {0x2F3C, 3045, 1},
  {0x2F3D, 3046, 1},
  {0x2F3E, 3047, 1},
  {0x2F3F, 3048, 1},
  {0x2F40, 3049, 1},
  {0x2F41, 3050, 1},
  {0x2F42, 3051, 1},
  {0x2F43, 3052, 1},
  {0x2F44, 3053, 1},
  {0x2F45, 3054, 1},
  {0x2F46, 3055, 1},
  {0x2F47, 3056, 1},
  {0x2F48, 3057, 1},
  {0x2F49, 3058, 1},
  {0x2F4A, 3059, 1},
  {0x2F4B, 3060, 1},
  {0x2F4C, 3061, 1},
  {0x2F4D, 3062, 1},
  {0x2F4E, 3063, 1},
  {0x2F4F, 3064, 1},
  {0x2F50, 3065, 1},
  {0x2F51, 3066, 1},
  {0x2F52, 3067, 1},
  {0x2F53, 3068, 1},
  {0x2F54, 3069, 1},
  {0x2F55, 3070, 1},
  {0x2F56, 3071, 1},
  {0x2F57, 3072, 1},
  {0x2F58, 3073, 1},
  {0x2F59, 3074, 1},
  {0x2F5A, 3075, 1},
  {0x2F5B, 3076, 1},
  {0x2F5C, 3077, 1},
  {0x2F5D, 3078, 1},
  {0x2F5E, 3079, 1},
  {0x2F5F, 3080, 1},
  {0x2F60, 3081, 1},
  {0x2F61, 3082, 1},
  {0x2F62, 3083, 1},
  {0x2F63, 3084, 1},
  {0x2F64, 3085, 1},
  {0x2F65, 3086, 1},
  {0x2F66, 3087, 1},
  {0x2F67, 3088, 1},
  {0x2F68, 3089, 1},
  {0x2F69, 3090, 1},
  {0x2F6A, 3091, 1},
  {0x2F6B, 3092, 1},
  {0x2F6C, 3093, 1},
  {0x2F6D, 3094, 1},
  {0x2F6E, 3095, 1},
  {0x2F6F, 3096, 1},
  {0x2F70, 3097, 1},
  {0x2F71, 3098, 1},
  {0x2F72, 3099, 1},
  {0x2F73, 3100, 1},
  {0x2F74, 3101, 1},
  {0x2F75, 3102, 1},
  {0x2F76, 3103, 1},
  {0x2F77, 3104, 1},
  {0x2F78, 3105, 1},
  {0x2F79, 3106, 1},
  {0x2F7A, 3107, 1},
  {0x2F7B, 3108, 1},
  {0x2F7C, 3109, 1},
  {0x2F7D, 3110, 1},
  {0x2F7E, 3111, 1},
  {0x2F7F, 3112, 1},
  {0x2F80, 3113, 1},
  {0x2F81, 3114, 1},
  {0x2F82, 3115, 1},
  {0x2F83, 3116, 1},
  {0x2F84, 3117, 1},
  {0x2F85, 3118, 1},
  {0x2F86, 3119, 1},
  {0x2F87, 3120, 1},
  {0x2F88, 3121, 1},
  {0x2F89, 3122, 1},
  {0x2F8A, 3123, 1},
  {0x2F8B, 3124, 1},
  {0x2F8C, 3125, 1},
  {0x2F8D, 3126, 1},
  {0x2F8E, 3127, 1},
  {0x2F8F, 3128, 1},
  {0x2F90, 3129, 1},
  {0x2F91, 3130, 1},
  {0x2F92, 3131, 1},
  {0x2F93, 3132, 1},
  {0x2F94, 3133, 1},
  {0x2F95, 3134, 1},
  {0x2F96, 3135, 1},
  {0x2F97, 3136, 1},
  {0x2F98, 3137, 1},
  {0x2F99, 3138, 1},
  {0x2F9A, 3139, 1},
  {0x2F9B, 3140, 1},
  {0x2F9C, 3141, 1},
  {0x2F9D, 3142, 1},
  {0x2F9E, 3143, 1},
  {0x2F9F, 3144, 1},
  {0x2FA0, 3145, 1},
  {0x2FA1, 3146, 1},
  {0x2FA2, 3147, 1},
  {0x2FA3, 3148, 1},
  {0x2FA4, 3149, 1},
  {0x2FA5, 3150, 1},
  {0x2FA6, 3151, 1},
  {0x2FA7, 3152, 1},
  {0x2FA8, 3153, 1},
  {0x2FA9, 3154, 1},
  {0x2FAA, 3155, 1},
  {0x2FAB, 3156, 1},
  {0x2FAC, 3157, 1},
  {0x2FAD, 3158, 1},
  {0x2FAE, 3159, 1},
  {0x2FAF, 3160, 1},
  {0x2FB0, 3161, 1},
  {0x2FB1, 3162, 1},
  {0x2FB2, 3163, 1},
  {0x2FB3, 3164, 1},
  {0x2FB4, 3165, 1},
  {0x2FB5, 3166, 1},
  {0x2FB6, 3167, 1},
  {0x2FB7, 3168, 1},
  {0x2FB8, 3169, 1},
  {0x2FB9, 3170, 1},
  {0x2FBA, 3171, 1},
  {0x2FBB, 3172, 1},
  {0x2FBC, 3173, 1},
  {0x2FBD, 3174, 1},
  {0x2FBE, 3175, 1},
  {0x2FBF, 3176, 1},
  {0x2FC0, 3177, 1},
  {0x2FC1, 3178, 1},
  {0x2FC2, 3179, 1},
  {0x2FC3, 3180, 1},
  {0x2FC4, 3181, 1},
  {0x2FC5, 3182, 1},
  {0x2FC6, 3183, 1},
  {0x2FC7, 3184, 1},
  {0x2FC8, 3185, 1},
  {0x2FC9, 3186, 1},
  {0x2FCA, 3187, 1},
  {0x2FCB, 3188, 1},
  {0x2FCC, 3189, 1},
  {0x2FCD, 3190, 1},
  {0x2FCE, 3191, 1},
  {0x2FCF, 3192, 1},
  {0x2FD0, 3193, 1},
  {0x2FD1, 3194, 1},
  {0x2FD2, 3195, 1},
  {0x2FD3, 3196, 1},
  {0x2FD4, 3197, 1},
  {0x2FD5, 3198, 1},
  {0xFB00, 3199, 2},
  {0xFB01, 3201, 2},
  {0xFB02, 3203, 2},
  {0xFB03, 3205, 3},
  {0xFB04, 3208, 3},
  {0xFB05, 3211, 2},
  {0xFB06, 3213, 2},
  {0xFB13, 3215, 2},
  {0xFB14, 3217, 2},
  {0xFB15, 3219, 2},
  {0xFB16, 3221, 2},
  {0xFB17, 3223, 2},
  {0xFB1D, 3225, 2},
  {0xFB1F, 3227, 2},
  {0xFB20, 3229, 1},
  {0xFB21, 3230, 1},
  {0xFB22, 3231, 1},
  {0xFB23, 3232, 1},
  {0xFB24, 3233, 1},
  {0xFB25, 3234, 1},
  {0xFB26, 3235, 1},
  {0xFB27, 3236, 1},
  {0xFB28, 3237, 1},
  {0xFB29, 3238, 1},
  {0xFB2A, 3239, 2},
  {0xFB2B, 3241, 2},
  {0xFB2C, 3243, 3},
  {0xFB2D, 3246, 3},
  {0xFB2E, 3249, 2},
  {0xFB2F, 3251, 2},
  {0xFB30, 3253, 2},
  {0xFB31, 3255, 2},
  {0xFB32, 3257, 2},
  {0xFB33, 3259, 2},
  {0xFB34, 3261, 2},
  {0xFB35, 3263, 2},
  {0xFB36, 3265, 2},
  {0xFB38, 3267, 2},
  {0xFB39, 3269, 2},
  {0xFB3A, 3271, 2},
  {0xFB3B, 3273, 2},
  {0xFB3C, 3275, 2},
  {0xFB3E, 3277, 2},
  {0xFB40, 3279, 2},
  {0xFB41, 3281, 2},
  {0xFB43, 3283, 2},
  {0xFB44, 3285, 2},
  {0xFB46, 3287, 2},
  {0xFB47, 3289, 2},
  {0xFB48, 3291, 2},
  {0xFB49, 3293, 2},
  {0xFB4A, 3295, 2},
  {0xFB4B, 3297, 2},
  {0xFB4C, 3299, 2},
  {0xFB4D, 3301, 2},
  {0xFB4E, 3303, 2},
  {0xFB4F, 3305, 2},
};

inline constexpr char32_t kDecompPool[] = {
  0x0020, 0x0020, 0x0308, 0x0061, 0x0020, 0x0304, 0x0032, 0x0033, 0x0020, 0x0301, 0x03BC, 0x0020,
  0x0327, 0x0031, 0x006F, 0x0031, 0x2044, 0x0034, 0x0031, 0x2044, 0x0032, 0x0033, 0x2044, 0x0034,
  0x0041, 0x0300, 0x0041, 0x0301, 0x0041, 0x0302, 0x0041, 0x0303, 0x0041, 0x0308, 0x0041, 0x030A,
  0x0043, 0x0327, 0x0045, 0x0300, 0x0045, 0x0301, 0x0045, 0x0302, 0x0045, 0x0308, 0x0049, 0x0300,
  0x0049, 0x0301, 0x0049, 0x0302, 0x0049, 0x0308, 0x004E, 0x0303, 0x004F, 0x0300, 0x004F, 0x0301,
  0x004F, 0x0302, 0x004F, 0x0303, 0x004F, 0x0308, 0x0055, 0x0300, 0x0055, 0x0301, 0x0055, 0x0302,
  0x0055, 0x0308, 0x0059, 0x0301, 0x0061, 0x0300, 0x0061, 0x0301, 0x0061, 0x0302, 0x0061, 0x0303,
  0x0061, 0x0308, 0x0061, 0x030A, 0x0063, 0x0327, 0x0065, 0x0300, 0x0065, 0x0301, 0x0065, 0x0302,
  0x0065, 0x0308, 0x0069, 0x0300, 0x0069, 0x0301, 0x0069, 0x0302, 0x0069, 0x0308, 0x006E, 0x0303,
  0x006F, 0x0300, 0x006F, 0x0301, 0x006F, 0x0302, 0x006F, 0x0303, 0x006F, 0x0308, 0x0075, 0x0300,
  0x0075, 0x0301, 0x0075, 0x0302, 0x0075, 0x0308, 0x0079, 0x0301, 0x0079, 0x0308, 0x0041, 0x0304,
  0x0061, 0x0304, 0x0041, 0x0306, 0x0061, 0x0306, 0x0041, 0x0328, 0x0061, 0x0328, 0x0043, 0x0301,
  0x0063, 0x0301, 0x0043, 0x0302, 0x0063, 0x0302, 0x0043, 0x0307, 0x0063, 0x0307, 0x0043, 0x030C,
  0x0063, 0x030C, 0x0044, 0x030C, 0x0064, 0x030C, 0x0045, 0x0304, 0x0065, 0x0304, 0x0045, 0x0306,
  0x0065, 0x0306, 0x0045, 0x0307, 0x0065, 0x0307, 0x0045, 0x0328, 0x0065, 0x0328, 0x0045, 0x030C,
  0x0065, 0x030C, 0x0047, 0x0302, 0x0067, 0x0302, 0x0047, 0x0306, 0x0067, 0x0306, 0x0047, 0x0307,
  0x0067, 0x0307, 0x0047, 0x0327, 0x0067, 0x0327, 0x0048, 0x0302, 0x0068, 0x0302, 0x0049, 0x0303,
  0x0069, 0x0303, 0x0049, 0x0304, 0x0069, 0x0304, 0x0049, 0x0306, 0x0069, 0x0306, 0x0049, 0x0328,
  0x0069, 0x0328, 0x0049, 0x0307, 0x0049, 0x004A, 0x0069, 0x006A, 0x004A, 0x0302, 0x006A, 0x0302,
  0x004B, 0x0327, 0x006B, 0x0327, 0x004C, 0x0301, 0x006C, 0x0301, 0x004C, 0x0327, 0x006C, 0x0327,
  0x004C, 0x030C, 0x006C, 0x030C, 0x004C, 0x00B7, 0x006C, 0x00B7, 0x004E, 0x0301, 0x006E, 0x0301,
  0x004E, 0x0327, 0x006E, 0x0327, 0x004E, 0x030C, 0x006E, 0x030C, 0x02BC, 0x006E, 0x004F, 0x0304,
  0x006F, 0x0304, 0x004F, 0x0306, 0x006F, 0x0306, 0x004F, 0x030B, 0x006F, 0x030B, 0x0052, 0x0301,
  0x0072, 0x0301, 0x0052, 0x0327, 0x0072, 0x0327, 0x0052, 0x030C, 0x0072, 0x030C, 0x0053, 0x0301,
  0x0073, 0x0301, 0x0053, 0x0302, 0x0073, 0x0302, 0x0053, 0x0327, 0x0073, 0x0327, 0x0053, 0x030C,
  0x0073, 0x030C, 0x0054, 0x0327, 0x0074, 0x0327, 0x0054, 0x030C, 0x0074, 0x030C, 0x0055, 0x0303,
  0x0075, 0x0303, 0x0055, 0x0304, 0x0075, 0x0304, 0x0055, 0x0306, 0x0075, 0x0306, 0x0055, 0x030A,
  0x0075, 0x030A, 0x0055, 0x030B, 0x0075, 0x030B, 0x0055, 0x0328, 0x0075, 0x0328, 0x0057, 0x0302,
  0x0077, 0x0302, 0x0059, 0x0302, 0x0079, 0x0302, 0x0059, 0x0308, 0x005A, 0x0301, 0x007A, 0x0301,
  0x005A, 0x0307, 0x007A, 0x0307, 0x005A, 0x030C, 0x007A, 0x030C, 0x0073, 0x004F, 0x031B, 0x006F,
  0x031B, 0x0055, 0x031B, 0x0075, 0x031B, 0x0044, 0x005A, 0x030C, 0x0044, 0x007A, 0x030C, 0x0064,
  0x007A, 0x030C, 0x004C, 0x004A, 0x004C, 0x006A, 0x006C, 0x006A, 0x004E, 0x004A, 0x004E, 0x006A,
  0x006E, 0x006A, 0x0041, 0x030C, 0x0061, 0x030C, 0x0049, 0x030C, 0x0069, 0x030C, 0x004F, 0x030C,
  0x006F, 0x030C, 0x0055, 0x030C, 0x0075, 0x030C, 0x0055, 0x0308, 0x0304, 0x0075, 0x0308, 0x0304,
  0x0055, 0x0308, 0x0301, 0x0075, 0x0308, 0x0301, 0x0055, 0x0308, 0x030C, 0x0075, 0x0308, 0x030C,
  0x0055, 0x0308, 0x0300, 0x0075, 0x0308, 0x0300, 0x0041, 0x0308, 0x0304, 0x0061, 0x0308, 0x0304,
  0x0041, 0x0307, 0x0304, 0x0061, 0x0307, 0x0304, 0x00C6, 0x0304, 0x00E6, 0x0304, 0x0047, 0x030C,
  0x0067, 0x030C, 0x004B, 0x030C, 0x006B, 0x030C, 0x004F, 0x0328, 0x006F, 0x0328, 0x004F, 0x0328,
  0x0304, 0x006F, 0x0328, 0x0304, 0x01B7, 0x030C, 0x0292, 0x030C, 0x006A, 0x030C, 0x0044, 0x005A,
  0x0044, 0x007A, 0x0064, 0x007A, 0x0047, 0x0301, 0x0067, 0x0301, 0x004E, 0x0300, 0x006E, 0x0300,
  0x0041, 0x030A, 0x0301, 0x0061, 0x030A, 0x0301, 0x00C6, 0x0301, 0x00E6, 0x0301, 0x00D8, 0x0301,
  0x00F8, 0x0301, 0x0041, 0x030F, 0x0061, 0x030F, 0x0041, 0x0311, 0x0061, 0x0311, 0x0045, 0x030F,
  0x0065, 0x030F, 0x0045, 0x0311, 0x0065, 0x0311, 0x0049, 0x030F, 0x0069, 0x030F, 0x0049, 0x0311,
  0x0069, 0x0311, 0x004F, 0x030F, 0x006F, 0x030F, 0x004F, 0x0311, 0x006F, 0x0311, 0x0052, 0x030F,
  0x0072, 0x030F, 0x0052, 0x0311, 0x0072, 0x0311, 0x0055, 0x030F, 0x0075, 0x030F, 0x0055, 0x0311,
  0x0075, 0x0311, 0x0053, 0x0326, 0x0073, 0x0326, 0x0054, 0x0326, 0x0074, 0x0326, 0x0048, 0x030C,
  0x0068, 0x030C, 0x0041, 0x0307, 0x0061, 0x0307, 0x0045, 0x0327, 0x0065, 0x0327, 0x004F, 0x0308,
  0x0304, 0x006F, 0x0308, 0x0304, 0x004F, 0x0303, 0x0304, 0x006F, 0x0303, 0x0304, 0x004F, 0x0307,
  0x006F, 0x0307, 0x004F, 0x0307, 0x0304, 0x006F, 0x0307, 0x0304, 0x0059, 0x0304, 0x0079, 0x0304,
  0x0068, 0x0266, 0x006A, 0x0072, 0x0279, 0x027B, 0x0281, 0x0077, 0x0079, 0x0020, 0x0306, 0x0020,
  0x0307, 0x0020, 0x030A, 0x0020, 0x0328, 0x0020, 0x0303, 0x0020, 0x030B, 0x0263, 0x006C, 0x0073,
  0x0078, 0x0295, 0x0300, 0x0301, 0x0313, 0x0308, 0x0301, 0x02B9, 0x0020, 0x0345, 0x003B, 0x0020,
  0x0301, 0x0020, 0x0308, 0x0301, 0x0391, 0x0301, 0x00B7, 0x0395, 0x0301, 0x0397, 0x0301, 0x0399,
  0x0301, 0x039F, 0x0301, 0x03A5, 0x0301, 0x03A9, 0x0301, 0x03B9, 0x0308, 0x0301, 0x0399, 0x0308,
  0x03A5, 0x0308, 0x03B1, 0x0301, 0x03B5, 0x0301, 0x03B7, 0x0301, 0x03B9, 0x0301, 0x03C5, 0x0308,
  0x0301, 0x03B9, 0x0308, 0x03C5, 0x0308, 0x03BF, 0x0301, 0x03C5, 0x0301, 0x03C9, 0x0301, 0x03B2,
  0x03B8, 0x03A5, 0x03A5, 0x0301, 0x03A5, 0x0308, 0x03C6, 0x03C0, 0x03BA, 0x03C1, 0x03C2, 0x0398,
  0x03B5, 0x03A3, 0x0415, 0x0300, 0x0415, 0x0308, 0x0413, 0x0301, 0x0406, 0x0308, 0x041A, 0x0301,
  0x0418, 0x0300, 0x0423, 0x0306, 0x0418, 0x0306, 0x0438, 0x0306, 0x0435, 0x0300, 0x0435, 0x0308,
  0x0433, 0x0301, 0x0456, 0x0308, 0x043A, 0x0301, 0x0438, 0x0300, 0x0443, 0x0306, 0x0474, 0x030F,
  0x0475, 0x030F, 0x0416, 0x0306, 0x0436, 0x0306, 0x0410, 0x0306, 0x0430, 0x0306, 0x0410, 0x0308,
  0x0430, 0x0308, 0x0415, 0x0306, 0x0435, 0x0306, 0x04D8, 0x0308, 0x04D9, 0x0308, 0x0416, 0x0308,
  0x0436, 0x0308, 0x0417, 0x0308, 0x0437, 0x0308, 0x0418, 0x0304, 0x0438, 0x0304, 0x0418, 0x0308,
  0x0438, 0x0308, 0x041E, 0x0308, 0x043E, 0x0308, 0x04E8, 0x0308, 0x04E9, 0x0308, 0x042D, 0x0308,
  0x044D, 0x0308, 0x0423, 0x0304, 0x0443, 0x0304, 0x0423, 0x0308, 0x0443, 0x0308, 0x0423, 0x030B,
  0x0443, 0x030B, 0x0427, 0x0308, 0x0447, 0x0308, 0x042B, 0x0308, 0x044B, 0x0308, 0x0565, 0x0582,
  0x0627, 0x0653, 0x0627, 0x0654, 0x0648, 0x0654, 0x0627, 0x0655, 0x064A, 0x0654, 0x0627, 0x0674,
  0x0648, 0x0674, 0x06C7, 0x0674, 0x064A, 0x0674, 0x06D5, 0x0654, 0x06C1, 0x0654, 0x06D2, 0x0654,
  0x0928, 0x093C, 0x0930, 0x093C, 0x0933, 0x093C, 0x0915, 0x093C, 0x0916, 0x093C, 0x0917, 0x093C,
  0x091C, 0x093C, 0x0921, 0x093C, 0x0922, 0x093C, 0x092B, 0x093C, 0x092F, 0x093C, 0x09C7, 0x09BE,
  0x09C7, 0x09D7, 0x09A1, 0x09BC, 0x09A2, 0x09BC, 0x09AF, 0x09BC, 0x0A32, 0x0A3C, 0x0A38, 0x0A3C,
  0x0A16, 0x0A3C, 0x0A17, 0x0A3C, 0x0A1C, 0x0A3C, 0x0A2B, 0x0A3C, 0x0B47, 0x0B56, 0x0B47, 0x0B3E,
  0x0B47, 0x0B57, 0x0B21, 0x0B3C, 0x0B22, 0x0B3C, 0x0B92, 0x0BD7, 0x0BC6, 0x0BBE, 0x0BC7, 0x0BBE,
  0x0BC6, 0x0BD7, 0x0C46, 0x0C56, 0x0CBF, 0x0CD5, 0x0CC6, 0x0CD5, 0x0CC6, 0x0CD6, 0x0CC6, 0x0CC2,
  0x0CC6, 0x0CC2, 0x0CD5, 0x0D46, 0x0D3E, 0x0D47, 0x0D3E, 0x0D46, 0x0D57, 0x0DD9, 0x0DCA, 0x0DD9,
  0x0DCF, 0x0DD9, 0x0DCF, 0x0DCA, 0x0DD9, 0x0DDF, 0x0E4D, 0x0E32, 0x0ECD, 0x0EB2, 0x0EAB, 0x0E99,
  0x0EAB, 0x0EA1, 0x0F0B, 0x0F42, 0x0FB7, 0x0F4C, 0x0FB7, 0x0F51, 0x0FB7, 0x0F56, 0x0FB7, 0x0F5B,
  0x0FB7, 0x0F40, 0x0FB5, 0x0F71, 0x0F72, 0x0F71, 0x0F74, 0x0FB2, 0x0F80, 0x0FB2, 0x0F71, 0x0F80,
  0x0FB3, 0x0F80, 0x0FB3, 0x0F71, 0x0F80, 0x0F71, 0x0F80, 0x0F92, 0x0FB7, 0x0F9C, 0x0FB7, 0x0FA1,
  0x0FB7, 0x0FA6, 0x0FB7, 0x0FAB, 0x0FB7, 0x0F90, 0x0FB5, 0x1025, 0x102E, 0x10DC, 0x1B05, 0x1B35,
  0x1B07, 0x1B35, 0x1B09, 0x1B35, 0x1B0B, 0x1B35, 0x1B0D, 0x1B35, 0x1B11, 0x1B35, 0x1B3A, 0x1B35,
  0x1B3C, 0x1B35, 0x1B3E, 0x1B35, 0x1B3F, 0x1B35, 0x1B42, 0x1B35, 0x0041, 0x00C6, 0x0042, 0x0044,
  0x0045, 0x018E, 0x0047, 0x0048, 0x0049, 0x004A, 0x004B, 0x004C, 0x004D, 0x004E, 0x004F, 0x0222,
  0x0050, 0x0052, 0x0054, 0x0055, 0x0057, 0x0061, 0x0250, 0x0251, 0x1D02, 0x0062, 0x0064, 0x0065,
  0x0259, 0x025B, 0x025C, 0x0067, 0x006B, 0x006D, 0x014B, 0x006F, 0x0254, 0x1D16, 0x1D17, 0x0070,
  0x0074, 0x0075, 0x1D1D, 0x026F, 0x0076, 0x1D25, 0x03B2, 0x03B3, 0x03B4, 0x03C6, 0x03C7, 0x0069,
  0x0072, 0x0075, 0x0076, 0x03B2, 0x03B3, 0x03C1, 0x03C6, 0x03C7, 0x043D, 0x0252, 0x0063, 0x0255,
  0x00F0, 0x025C, 0x0066, 0x025F, 0x0261, 0x0265, 0x0268, 0x0269, 0x026A, 0x1D7B, 0x029D, 0x026D,
  0x1D85, 0x029F, 0x0271, 0x0270, 0x0272, 0x0273, 0x0274, 0x0275, 0x0278, 0x0282, 0x0283, 0x01AB,
  0x0289, 0x028A, 0x1D1C, 0x028B, 0x028C, 0x007A, 0x0290, 0x0291, 0x0292, 0x03B8, 0x0041, 0x0325,
  0x0061, 0x0325, 0x0042, 0x0307, 0x0062, 0x0307, 0x0042, 0x0323, 0x0062, 0x0323, 0x0042, 0x0331,
  0x0062, 0x0331, 0x0043, 0x0327, 0x0301, 0x0063, 0x0327, 0x0301, 0x0044, 0x0307, 0x0064, 0x0307,
  0x0044, 0x0323, 0x0064, 0x0323, 0x0044, 0x0331, 0x0064, 0x0331, 0x0044, 0x0327, 0x0064, 0x0327,
  0x0044, 0x032D, 0x0064, 0x032D, 0x0045, 0x0304, 0x0300, 0x0065, 0x0304, 0x0300, 0x0045, 0x0304,
  0x0301, 0x0065, 0x0304, 0x0301, 0x0045, 0x032D, 0x0065, 0x032D, 0x0045, 0x0330, 0x0065, 0x0330,
  0x0045, 0x0327, 0x0306, 0x0065, 0x0327, 0x0306, 0x0046, 0x0307, 0x0066, 0x0307, 0x0047, 0x0304,
  0x0067, 0x0304, 0x0048, 0x0307, 0x0068, 0x0307, 0x0048, 0x0323, 0x0068, 0x0323, 0x0048, 0x0308,
  0x0068, 0x0308, 0x0048, 0x0327, 0x0068, 0x0327, 0x0048, 0x032E, 0x0068, 0x032E, 0x0049, 0x0330,
  0x0069, 0x0330, 0x0049, 0x0308, 0x0301, 0x0069, 0x0308, 0x0301, 0x004B, 0x0301, 0x006B, 0x0301,
  0x004B, 0x0323, 0x006B, 0x0323, 0x004B, 0x0331, 0x006B, 0x0331, 0x004C, 0x0323, 0x006C, 0x0323,
  0x004C, 0x0323, 0x0304, 0x006C, 0x0323, 0x0304, 0x004C, 0x0331, 0x006C, 0x0331, 0x004C, 0x032D,
  0x006C, 0x032D, 0x004D, 0x0301, 0x006D, 0x0301, 0x004D, 0x0307, 0x006D, 0x0307, 0x004D, 0x0323,
  0x006D, 0x0323, 0x004E, 0x0307, 0x006E, 0x0307, 0x004E, 0x0323, 0x006E, 0x0323, 0x004E, 0x0331,
  0x006E, 0x0331, 0x004E, 0x032D, 0x006E, 0x032D, 0x004F, 0x0303, 0x0301, 0x006F, 0x0303, 0x0301,
  0x004F, 0x0303, 0x0308, 0x006F, 0x0303, 0x0308, 0x004F, 0x0304, 0x0300, 0x006F, 0x0304, 0x0300,
  0x004F, 0x0304, 0x0301, 0x006F, 0x0304, 0x0301, 0x0050, 0x0301, 0x0070, 0x0301, 0x0050, 0x0307,
  0x0070, 0x0307, 0x0052, 0x0307, 0x0072, 0x0307, 0x0052, 0x0323, 0x0072, 0x0323, 0x0052, 0x0323,
  0x0304, 0x0072, 0x0323, 0x0304, 0x0052, 0x0331, 0x0072, 0x0331, 0x0053, 0x0307, 0x0073, 0x0307,
  0x0053, 0x0323, 0x0073, 0x0323, 0x0053, 0x0301, 0x0307, 0x0073, 0x0301, 0x0307, 0x0053, 0x030C,
  0x0307, 0x0073, 0x030C, 0x0307, 0x0053, 0x0323, 0x0307, 0x0073, 0x0323, 0x0307, 0x0054, 0x0307,
  0x0074, 0x0307, 0x0054, 0x0323, 0x0074, 0x0323, 0x0054, 0x0331, 0x0074, 0x0331, 0x0054, 0x032D,
  0x0074, 0x032D, 0x0055, 0x0324, 0x0075, 0x0324, 0x0055, 0x0330, 0x0075, 0x0330, 0x0055, 0x032D,
  0x0075, 0x032D, 0x0055, 0x0303, 0x0301, 0x0075, 0x0303, 0x0301, 0x0055, 0x0304, 0x0308, 0x0075,
  0x0304, 0x0308, 0x0056, 0x0303, 0x0076, 0x0303, 0x0056, 0x0323, 0x0076, 0x0323, 0x0057, 0x0300,
  0x0077, 0x0300, 0x0057, 0x0301, 0x0077, 0x0301, 0x0057, 0x0308, 0x0077, 0x0308, 0x0057, 0x0307,
  0x0077, 0x0307, 0x0057, 0x0323, 0x0077, 0x0323, 0x0058, 0x0307, 0x0078, 0x0307, 0x0058, 0x0308,
  0x0078, 0x0308, 0x0059, 0x0307, 0x0079, 0x0307, 0x005A, 0x0302, 0x007A, 0x0302, 0x005A, 0x0323,
  0x007A, 0x0323, 0x005A, 0x0331, 0x007A, 0x0331, 0x0068, 0x0331, 0x0074, 0x0308, 0x0077, 0x030A,
  0x0079, 0x030A, 0x0061, 0x02BE, 0x0073, 0x0307, 0x0041, 0x0323, 0x0061, 0x0323, 0x0041, 0x0309,
  0x0061, 0x0309, 0x0041, 0x0302, 0x0301, 0x0061, 0x0302, 0x0301, 0x0041, 0x0302, 0x0300, 0x0061,
  0x0302, 0x0300, 0x0041, 0x0302, 0x0309, 0x0061, 0x0302, 0x0309, 0x0041, 0x0302, 0x0303, 0x0061,
  0x0302, 0x0303, 0x0041, 0x0323, 0x0302, 0x0061, 0x0323, 0x0302, 0x0041, 0x0306, 0x0301, 0x0061,
  0x0306, 0x0301, 0x0041, 0x0306, 0x0300, 0x0061, 0x0306, 0x0300, 0x0041, 0x0306, 0x0309, 0x0061,
  0x0306, 0x0309, 0x0041, 0x0306, 0x0303, 0x0061, 0x0306, 0x0303, 0x0041, 0x0323, 0x0306, 0x0061,
  0x0323, 0x0306, 0x0045, 0x0323, 0x0065, 0x0323, 0x0045, 0x0309, 0x0065, 0x0309, 0x0045, 0x0303,
  0x0065, 0x0303, 0x0045, 0x0302, 0x0301, 0x0065, 0x0302, 0x0301, 0x0045, 0x0302, 0x0300, 0x0065,
  0x0302, 0x0300, 0x0045, 0x0302, 0x0309, 0x0065, 0x0302, 0x0309, 0x0045, 0x0302, 0x0303, 0x0065,
  0x0302, 0x0303, 0x0045, 0x0323, 0x0302, 0x0065, 0x0323, 0x0302, 0x0049, 0x0309, 0x0069, 0x0309,
  0x0049, 0x0323, 0x0069, 0x0323, 0x004F, 0x0323, 0x006F, 0x0323, 0x004F, 0x0309, 0x006F, 0x0309,
  0x004F, 0x0302, 0x0301, 0x006F, 0x0302, 0x0301, 0x004F, 0x0302, 0x0300, 0x006F, 0x0302, 0x0300,
  0x004F, 0x0302, 0x0309, 0x006F, 0x0302, 0x0309, 0x004F, 0x0302, 0x0303, 0x006F, 0x0302, 0x0303,
  0x004F, 0x0323, 0x0302, 0x006F, 0x0323, 0x0302, 0x004F, 0x031B, 0x0301, 0x006F, 0x031B, 0x0301,
  0x004F, 0x031B, 0x0300, 0x006F, 0x031B, 0x0300, 0x004F, 0x031B, 0x0309, 0x006F, 0x031B, 0x0309,
  0x004F, 0x031B, 0x0303, 0x006F, 0x031B, 0x0303, 0x004F, 0x031B, 0x0323, 0x006F, 0x031B, 0x0323,
  0x0055, 0x0323, 0x0075, 0x0323, 0x0055, 0x0309, 0x0075, 0x0309, 0x0055, 0x031B, 0x0301, 0x0075,
  0x031B, 0x0301, 0x0055, 0x031B, 0x0300, 0x0075, 0x031B, 0x0300, 0x0055, 0x031B, 0x0309, 0x0075,
  0x031B, 0x0309, 0x0055, 0x031B, 0x0303, 0x0075, 0x031B, 0x0303, 0x0055, 0x031B, 0x0323, 0x0075,
  0x031B, 0x0323, 0x0059, 0x0300, 0x0079, 0x0300, 0x0059, 0x0323, 0x0079, 0x0323, 0x0059, 0x0309,
  0x0079, 0x0309, 0x0059, 0x0303, 0x0079, 0x0303, 0x03B1, 0x0313, 0x03B1, 0x0314, 0x03B1, 0x0313,
  0x0300, 0x03B1, 0x0314, 0x0300, 0x03B1, 0x0313, 0x0301, 0x03B1, 0x0314, 0x0301, 0x03B1, 0x0313,
  0x0342, 0x03B1, 0x0314, 0x0342, 0x0391, 0x0313, 0x0391, 0x0314, 0x0391, 0x0313, 0x0300, 0x0391,
  0x0314, 0x0300, 0x0391, 0x0313, 0x0301, 0x0391, 0x0314, 0x0301, 0x0391, 0x0313, 0x0342, 0x0391,
  0x0314, 0x0342, 0x03B5, 0x0313, 0x03B5, 0x0314, 0x03B5, 0x0313, 0x0300, 0x03B5, 0x0314, 0x0300,
  0x03B5, 0x0313, 0x0301, 0x03B5, 0x0314, 0x0301, 0x0395, 0x0313, 0x0395, 0x0314, 0x0395, 0x0313,
  0x0300, 0x0395, 0x0314, 0x0300, 0x0395, 0x0313, 0x0301, 0x0395, 0x0314, 0x0301, 0x03B7, 0x0313,
  0x03B7, 0x0314, 0x03B7, 0x0313, 0x0300, 0x03B7, 0x0314, 0x0300, 0x03B7, 0x0313, 0x0301, 0x03B7,
  0x0314, 0x0301, 0x03B7, 0x0313, 0x0342, 0x03B7, 0x0314, 0x0342, 0x0397, 0x0313, 0x0397, 0x0314,
  0x0397, 0x0313, 0x0300, 0x0397, 0x0314, 0x0300, 0x0397, 0x0313, 0x0301, 0x0397, 0x0314, 0x0301,
  0x0397, 0x0313, 0x0342, 0x0397, 0x0314, 0x0342, 0x03B9, 0x0313, 0x03B9, 0x0314, 0x03B9, 0x0313,
  0x0300, 0x03B9, 0x0314, 0x0300, 0x03B9, 0x0313, 0x0301, 0x03B9, 0x0314, 0x0301, 0x03B9, 0x0313,
  0x0342, 0x03B9, 0x0314, 0x0342, 0x0399, 0x0313, 0x0399, 0x0314, 0x0399, 0x0313, 0x0300, 0x0399,
  0x0314, 0x0300, 0x0399, 0x0313, 0x0301, 0x0399, 0x0314, 0x0301, 0x0399, 0x0313, 0x0342, 0x0399,
  0x0314, 0x0342, 0x03BF, 0x0313, 0x03BF, 0x0314, 0x03BF, 0x0313, 0x0300, 0x03BF, 0x0314, 0x0300,
  0x03BF, 0x0313, 0x0301, 0x03BF, 0x0314, 0x0301, 0x039F, 0x0313, 0x039F, 0x0314, 0x039F, 0x0313,
  0x0300, 0x039F, 0x0314, 0x0300, 0x039F, 0x0313, 0x0301, 0x039F, 0x0314, 0x0301, 0x03C5, 0x0313,
  0x03C5, 0x0314, 0x03C5, 0x0313, 0x0300, 0x03C5, 0x0314, 0x0300, 0x03C5, 0x0313, 0x0301, 0x03C5,
  0x0314, 0x0301, 0x03C5, 0x0313, 0x0342, 0x03C5, 0x0314, 0x0342, 0x03A5, 0x0314, 0x03A5, 0x0314,
  0x0300, 0x03A5, 0x0314, 0x0301, 0x03A5, 0x0314, 0x0342, 0x03C9, 0x0313, 0x03C9, 0x0314, 0x03C9,
  0x0313, 0x0300, 0x03C9, 0x0314, 0x0300, 0x03C9, 0x0313, 0x0301, 0x03C9, 0x0314, 0x0301, 0x03C9,
  0x0313, 0x0342, 0x03C9, 0x0314, 0x0342, 0x03A9, 0x0313, 0x03A9, 0x0314, 0x03A9, 0x0313, 0x0300,
  0x03A9, 0x0314, 0x0300, 0x03A9, 0x0313, 0x0301, 0x03A9, 0x0314, 0x0301, 0x03A9, 0x0313, 0x0342,
  0x03A9, 0x0314, 0x0342, 0x03B1, 0x0300, 0x03B1, 0x0301, 0x03B5, 0x0300, 0x03B5, 0x0301, 0x03B7,
  0x0300, 0x03B7, 0x0301, 0x03B9, 0x0300, 0x03B9, 0x0301, 0x03BF, 0x0300, 0x03BF, 0x0301, 0x03C5,
  0x0300, 0x03C5, 0x0301, 0x03C9, 0x0300, 0x03C9, 0x0301, 0x03B1, 0x0313, 0x0345, 0x03B1, 0x0314,
  0x0345, 0x03B1, 0x0313, 0x0300, 0x0345, 0x03B1, 0x0314, 0x0300, 0x0345, 0x03B1, 0x0313, 0x0301,
  0x0345, 0x03B1, 0x0314, 0x0301, 0x0345, 0x03B1, 0x0313, 0x0342, 0x0345, 0x03B1, 0x0314, 0x0342,
  0x0345, 0x0391, 0x0313, 0x0345, 0x0391, 0x0314, 0x0345, 0x0391, 0x0313, 0x0300, 0x0345, 0x0391,
  0x0314, 0x0300, 0x0345, 0x0391, 0x0313, 0x0301, 0x0345, 0x0391, 0x0314, 0x0301, 0x0345, 0x0391,
  0x0313, 0x0342, 0x0345, 0x0391, 0x0314, 0x0342, 0x0345, 0x03B7, 0x0313, 0x0345, 0x03B7, 0x0314,
  0x0345, 0x03B7, 0x0313, 0x0300, 0x0345, 0x03B7, 0x0314, 0x0300, 0x0345, 0x03B7, 0x0313, 0x0301,
  0x0345, 0x03B7, 0x0314, 0x0301, 0x0345, 0x03B7, 0x0313, 0x0342, 0x0345, 0x03B7, 0x0314, 0x0342,
  0x0345, 0x0397, 0x0313, 0x0345, 0x0397, 0x0314, 0x0345, 0x0397, 0x0313, 0x0300, 0x0345, 0x0397,
  0x0314, 0x0300, 0x0345, 0x0397, 0x0313, 0x0301, 0x0345, 0x0397, 0x0314, 0x0301, 0x0345, 0x0397,
  0x0313, 0x0342, 0x0345, 0x0397, 0x0314, 0x0342, 0x0345, 0x03C9, 0x0313, 0x0345, 0x03C9, 0x0314,
  0x0345, 0x03C9, 0x0313, 0x0300, 0x0345, 0x03C9, 0x0314, 0x0300, 0x0345, 0x03C9, 0x0313, 0x0301,
  0x0345, 0x03C9, 0x0314, 0x0301, 0x0345, 0x03C9, 0x0313, 0x0342, 0x0345, 0x03C9, 0x0314, 0x0342,
  0x0345, 0x03A9, 0x0313, 0x0345, 0x03A9, 0x0314, 0x0345, 0x03A9, 0x0313, 0x0300, 0x0345, 0x03A9,
  0x0314, 0x0300, 0x0345, 0x03A9, 0x0313, 0x0301, 0x0345, 0x03A9, 0x0314, 0x0301, 0x0345, 0x03A9,
  0x0313, 0x0342, 0x0345, 0x03A9, 0x0314, 0x0342, 0x0345, 0x03B1, 0x0306, 0x03B1, 0x0304, 0x03B1,
  0x0300, 0x0345, 0x03B1, 0x0345, 0x03B1, 0x0301, 0x0345, 0x03B1, 0x0342, 0x03B1, 0x0342, 0x0345,
  0x0391, 0x0306, 0x0391, 0x0304, 0x0391, 0x0300, 0x0391, 0x0301, 0x0391, 0x0345, 0x0020, 0x0313,
  0x03B9, 0x0020, 0x0313, 0x0020, 0x0342, 0x0020, 0x0308, 0x0342, 0x03B7, 0x0300, 0x0345, 0x03B7,
  0x0345, 0x03B7, 0x0301, 0x0345, 0x03B7, 0x0342, 0x03B7, 0x0342, 0x0345, 0x0395, 0x0300, 0x0395,
  0x0301, 0x0397, 0x0300, 0x0397, 0x0301, 0x0397, 0x0345, 0x0020, 0x0313, 0x0300, 0x0020, 0x0313,
  0x0301, 0x0020, 0x0313, 0x0342, 0x03B9, 0x0306, 0x03B9, 0x0304, 0x03B9, 0x0308, 0x0300, 0x03B9,
  0x0308, 0x0301, 0x03B9, 0x0342, 0x03B9, 0x0308, 0x0342, 0x0399, 0x0306, 0x0399, 0x0304, 0x0399,
  0x0300, 0x0399, 0x0301, 0x0020, 0x0314, 0x0300, 0x0020, 0x0314, 0x0301, 0x0020, 0x0314, 0x0342,
  0x03C5, 0x0306, 0x03C5, 0x0304, 0x03C5, 0x0308, 0x0300, 0x03C5, 0x0308, 0x0301, 0x03C1, 0x0313,
  0x03C1, 0x0314, 0x03C5, 0x0342, 0x03C5, 0x0308, 0x0342, 0x03A5, 0x0306, 0x03A5, 0x0304, 0x03A5,
  0x0300, 0x03A5, 0x0301, 0x03A1, 0x0314, 0x0020, 0x0308, 0x0300, 0x0020, 0x0308, 0x0301, 0x0060,
  0x03C9, 0x0300, 0x0345, 0x03C9, 0x0345, 0x03C9, 0x0301, 0x0345, 0x03C9, 0x0342, 0x03C9, 0x0342,
  0x0345, 0x039F, 0x0300, 0x039F, 0x0301, 0x03A9, 0x0300, 0x03A9, 0x0301, 0x03A9, 0x0345, 0x0020,
  0x0301, 0x0020, 0x0314, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020, 0x0020,
  0x0020, 0x0020, 0x2010, 0x0020, 0x0333, 0x002E, 0x002E, 0x002E, 0x002E, 0x002E, 0x002E, 0x0020,
  0x2032, 0x2032, 0x2032, 0x2032, 0x2032, 0x2035, 0x2035, 0x2035, 0x2035, 0x2035, 0x0021, 0x0021,
  0x0020, 0x0305, 0x003F, 0x003F, 0x003F, 0x0021, 0x0021, 0x003F, 0x2032, 0x2032, 0x2032, 0x2032,
  0x0020, 0x0030, 0x0069, 0x0034, 0x0035, 0x0036, 0x0037, 0x0038, 0x0039, 0x002B, 0x2212, 0x003D,
  0x0028, 0x0029, 0x006E, 0x0030, 0x0031, 0x0032, 0x0033, 0x0034, 0x0035, 0x0036, 0x0037, 0x0038,
  0x0039, 0x002B, 0x2212, 0x003D, 0x0028, 0x0029, 0x0061, 0x0065, 0x006F, 0x0078, 0x0259, 0x0068,
  0x006B, 0x006C, 0x006D, 0x006E, 0x0070, 0x0073, 0x0074, 0x0052, 0x0073, 0x0061, 0x002F, 0x0063,
  0x0061, 0x002F, 0x0073, 0x0043, 0x00B0, 0x0043, 0x0063, 0x002F, 0x006F, 0x0063, 0x002F, 0x0075,
  0x0190, 0x00B0, 0x0046, 0x0067, 0x0048, 0x0048, 0x0048, 0x0068, 0x0127, 0x0049, 0x0049, 0x004C,
  0x006C, 0x004E, 0x004E, 0x006F, 0x0050, 0x0051, 0x0052, 0x0052, 0x0052, 0x0053, 0x004D, 0x0054,
  0x0045, 0x004C, 0x0054, 0x004D, 0x005A, 0x03A9, 0x005A, 0x004B, 0x0041, 0x030A, 0x0042, 0x0043,
  0x0065, 0x0045, 0x0046, 0x004D, 0x006F, 0x05D0, 0x05D1, 0x05D2, 0x05D3, 0x0069, 0x0046, 0x0041,
  0x0058, 0x03C0, 0x03B3, 0x0393, 0x03A0, 0x2211, 0x0044, 0x0064, 0x0065, 0x0069, 0x006A, 0x0031,
  0x2044, 0x0037, 0x0031, 0x2044, 0x0039, 0x0031, 0x2044, 0x0031, 0x0030, 0x0031, 0x2044, 0x0033,
  0x0032, 0x2044, 0x0033, 0x0031, 0x2044, 0x0035, 0x0032, 0x2044, 0x0035, 0x0033, 0x2044, 0x0035,
  0x0034, 0x2044, 0x0035, 0x0031, 0x2044, 0x0036, 0x0035, 0x2044, 0x0036, 0x0031, 0x2044, 0x0038,
  0x0033, 0x2044, 0x0038, 0x0035, 0x2044, 0x0038, 0x0037, 0x2044, 0x0038, 0x0031, 0x2044, 0x0049,
  0x0049, 0x0049, 0x0049, 0x0049, 0x0049, 0x0049, 0x0056, 0x0056, 0x0056, 0x0049, 0x0056, 0x0049,
  0x0049, 0x0056, 0x0049, 0x0049, 0x0049, 0x0049, 0x0058, 0x0058, 0x0058, 0x0049, 0x0058, 0x0049,
  0x0049, 0x004C, 0x0043, 0x0044, 0x004D, 0x0069, 0x0069, 0x0069, 0x0069, 0x0069, 0x0069, 0x0069,
  0x0076, 0x0076, 0x0076, 0x0069, 0x0076, 0x0069, 0x0069, 0x0076, 0x0069, 0x0069, 0x0069, 0x0069,
  0x0078, 0x0078, 0x0078, 0x0069, 0x0078, 0x0069, 0x0069, 0x006C, 0x0063, 0x0064, 0x006D, 0x0030,
  0x2044, 0x0033, 0x2190, 0x0338, 0x2192, 0x0338, 0x2194, 0x0338, 0x21D0, 0x0338, 0x21D4, 0x0338,
  0x21D2, 0x0338, 0x2203, 0x0338, 0x2208, 0x0338, 0x220B, 0x0338, 0x2223, 0x0338, 0x2225, 0x0338,
  0x222B, 0x222B, 0x222B, 0x222B, 0x222B, 0x222E, 0x222E, 0x222E, 0x222E, 0x222E, 0x223C, 0x0338,
  0x2243, 0x0338, 0x2245, 0x0338, 0x2248, 0x0338, 0x003D, 0x0338, 0x2261, 0x0338, 0x224D, 0x0338,
  0x003C, 0x0338, 0x003E, 0x0338, 0x2264, 0x0338, 0x2265, 0x0338, 0x2272, 0x0338, 0x2273, 0x0338,
  0x2276, 0x0338, 0x2277, 0x0338, 0x227A, 0x0338, 0x227B, 0x0338, 0x2282, 0x0338, 0x2283, 0x0338,
  0x2286, 0x0338, 0x2287, 0x0338, 0x22A2, 0x0338, 0x22A8, 0x0338, 0x22A9, 0x0338, 0x22AB, 0x0338,
  0x227C, 0x0338, 0x227D, 0x0338, 0x2291, 0x0338, 0x2292, 0x0338, 0x22B2, 0x0338, 0x22B3, 0x0338,
  0x22B4, 0x0338, 0x22B5, 0x0338, 0x3008, 0x3009, 0x0031, 0x0032, 0x0033, 0x0034, 0x0035, 0x0036,
  0x0037, 0x0038, 0x0039, 0x0031, 0x0030, 0x0031, 0x0031, 0x0031, 0x0032, 0x0031, 0x0033, 0x0031,
  0x0034, 0x0031, 0x0035, 0x0031, 0x0036, 0x0031, 0x0037, 0x0031, 0x0038, 0x0031, 0x0039, 0x0032,
  0x0030, 0x0028, 0x0031, 0x0029, 0x0028, 0x0032, 0x0029, 0x0028, 0x0033, 0x0029, 0x0028, 0x0034,
  0x0029, 0x0028, 0x0035, 0x0029, 0x0028, 0x0036, 0x0029, 0x0028, 0x0037, 0x0029, 0x0028, 0x0038,
  0x0029, 0x0028, 0x0039, 0x0029, 0x0028, 0x0031, 0x0030, 0x0029, 0x0028, 0x0031, 0x0031, 0x0029,
  0x0028, 0x0031, 0x0032, 0x0029, 0x0028, 0x0031, 0x0033, 0x0029, 0x0028, 0x0031, 0x0034, 0x0029,
  0x0028, 0x0031, 0x0035, 0x0029, 0x0028, 0x0031, 0x0036, 0x0029, 0x0028, 0x0031, 0x0037, 0x0029,
  0x0028, 0x0031, 0x0038, 0x0029, 0x0028, 0x0031, 0x0039, 0x0029, 0x0028, 0x0032, 0x0030, 0x0029,
  0x0031, 0x002E, 0x0032, 0x002E, 0x0033, 0x002E, 0x0034, 0x002E, 0x0035, 0x002E, 0x0036, 0x002E,
  0x0037, 0x002E, 0x0038, 0x002E, 0x0039, 0x002E, 0x0031, 0x0030, 0x002E, 0x0031, 0x0031, 0x002E,
  0x0031, 0x0032, 0x002E, 0x0031, 0x0033, 0x002E, 0x0031, 0x0034, 0x002E, 0x0031, 0x0035, 0x002E,
  0x0031, 0x0036, 0x002E, 0x0031, 0x0037, 0x002E, 0x0031, 0x0038, 0x002E, 0x0031, 0x0039, 0x002E,
  0x0032, 0x0030, 0x002E, 0x0028, 0x0061, 0x0029, 0x0028, 0x0062, 0x0029, 0x0028, 0x0063, 0x0029,
  0x0028, 0x0064, 0x0029, 0x0028, 0x0065, 0x0029, 0x0028, 0x0066, 0x0029, 0x0028, 0x0067, 0x0029,
  0x0028, 0x0068, 0x0029, 0x0028, 0x0069, 0x0029, 0x0028, 0x006A, 0x0029, 0x0028, 0x006B, 0x0029,
  0x0028, 0x006C, 0x0029, 0x0028, 0x006D, 0x0029, 0x0028, 0x006E, 0x0029, 0x0028, 0x006F, 0x0029,
  0x0028, 0x0070, 0x0029, 0x0028, 0x0071, 0x0029, 0x0028, 0x0072, 0x0029, 0x0028, 0x0073, 0x0029,
  0x0028, 0x0074, 0x0029, 0x0028, 0x0075, 0x0029, 0x0028, 0x0076, 0x0029, 0x0028, 0x0077, 0x0029,
  0x0028, 0x0078, 0x0029, 0x0028, 0x0079, 0x0029, 0x0028, 0x007A, 0x0029, 0x0041, 0x0042, 0x0043,
  0x0044, 0x0045, 0x0046, 0x0047, 0x0048, 0x0049, 0x004A, 0x004B, 0x004C, 0x004D, 0x004E, 0x004F,
  0x0050, 0x0051, 0x0052, 0x0053, 0x0054, 0x0055, 0x0056, 0x0057, 0x0058, 0x0059, 0x005A, 0x0061,
  0x0062, 0x0063, 0x0064, 0x0065, 0x0066, 0x0067, 0x0068, 0x0069, 0x006A, 0x006B, 0x006C, 0x006D,
  0x006E, 0x006F, 0x0070, 0x0071, 0x0072, 0x0073, 0x0074, 0x0075, 0x0076, 0x0077, 0x0078, 0x0079,
  0x007A, 0x0030, 0x222B, 0x222B, 0x222B, 0x222B, 0x003A, 0x003A, 0x003D, 0x003D, 0x003D, 0x003D,
  0x003D, 0x003D, 0x2ADD, 0x0338, 0x006A, 0x0056, 0x2D61, 0x6BCD, 0x9F9F, 0x4E00, 0x4E28, 0x4E36,
  0x4E3F, 0x4E59, 0x4E85, 0x4E8C, 0x4EA0, 0x4EBA, 0x513F, 0x5165, 0x516B, 0x5182, 0x5196, 0x51AB,
  0x51E0, 0x51F5, 0x5200, 0x529B, 0x52F9, 0x5315, 0x531A, 0x5338, 0x5341, 0x535C, 0x5369, 0x5382,
  0x53B6, 0x53C8, 0x53E3, 0x56D7, 0x571F, 0x58EB, 0x5902, 0x590A, 0x5915, 0x5927, 0x5973, 0x5B50,
  0x5B80, 0x5BF8, 0x5C0F, 0x5C22, 0x5C38, 0x5C6E, 0x5C71, 0x5DDB, 0x5DE5, 0x5DF1, 0x5DFE, 0x5E72,
  0x5E7A, 0x5E7F, 0x5EF4, 0x5EFE, 0x5F0B, 0x5F13, 0x5F50, 0x5F61, 0x5F73, 0x5FC3, 0x6208, 0x6236,
  0x624B, 0x652F, 0x6534, 0x6587, 0x6597, 0x65A4, 0x65B9, 0x65E0, 0x65E5, 0x66F0, 0x6708, 0x6728,
  0x6B20, 0x6B62, 0x6B79, 0x6BB3, 0x6BCB, 0x6BD4, 0x6BDB, 0x6C0F, 0x6C14, 0x6C34, 0x706B, 0x722A,
  0x7236, 0x723B, 0x723F, 0x7247, 0x7259, 0x725B, 0x72AC, 0x7384, 0x7389, 0x74DC, 0x74E6, 0x7518,
  0x751F, 0x7528, 0x7530, 0x758B, 0x7592, 0x7676, 0x767D, 0x76AE, 0x76BF, 0x76EE, 0x77DB, 0x77E2,
  0x77F3, 0x793A, 0x79B8, 0x79BE, 0x7A74, 0x7ACB, 0x7AF9, 0x7C73, 0x7CF8, 0x7F36, 0x7F51, 0x7F8A,
  0x7FBD, 0x8001, 0x800C, 0x8012, 0x8033, 0x807F, 0x8089, 0x81E3, 0x81EA, 0x81F3, 0x81FC, 0x820C,
  0x821B, 0x821F, 0x826E, 0x8272, 0x8278, 0x864D, 0x866B, 0x8840, 0x884C, 0x8863, 0x897E, 0x898B,
  0x89D2, 0x8A00, 0x8C37, 0x8C46, 0x8C55, 0x8C78, 0x8C9D, 0x8D64, 0x8D70, 0x8DB3, 0x8EAB, 0x8ECA,
  0x8F9B, 0x8FB0, 0x8FB5, 0x9091, 0x9149, 0x91C6, 0x91CC, 0x91D1, 0x9577, 0x9580, 0x961C, 0x96B6,
  0x96B9, 0x96E8, 0x9751, 0x975E, 0x9762, 0x9769, 0x97CB, 0x97ED, 0x97F3, 0x9801, 0x98A8, 0x98DB,
  0x98DF, 0x9996, 0x9999, 0x99AC, 0x9AA8, 0x9AD8, 0x9ADF, 0x9B25, 0x9B2F, 0x9B32, 0x9B3C, 0x9B5A,
  0x9CE5, 0x9E75, 0x9E7F, 0x9EA5, 0x9EBB, 0x9EC3, 0x9ECD, 0x9ED1, 0x9EF9, 0x9EFD, 0x9F0E, 0x9F13,
  0x9F20, 0x9F3B, 0x9F4A, 0x9F52, 0x9F8D, 0x9F9C, 0x9FA0, 0x0066, 0x0066, 0x0066, 0x0069, 0x0066,
  0x006C, 0x0066, 0x0066, 0x0069, 0x0066, 0x0066, 0x006C, 0x0073, 0x0074, 0x0073, 0x0074, 0x0574,
  0x0576, 0x0574, 0x0565, 0x0574, 0x056B, 0x057E, 0x0576, 0x0574, 0x056D, 0x05D9, 0x05B4, 0x05F2,
  0x05B7, 0x05E2, 0x05D0, 0x05D3, 0x05D4, 0x05DB, 0x05DC, 0x05DD, 0x05E8, 0x05EA, 0x002B, 0x05E9,
  0x05C1, 0x05E9, 0x05C2, 0x05E9, 0x05BC, 0x05C1, 0x05E9, 0x05BC, 0x05C2, 0x05D0, 0x05B7, 0x05D0,
  0x05B8, 0x05D0, 0x05BC, 0x05D1, 0x05BC, 0x05D2, 0x05BC, 0x05D3, 0x05BC, 0x05D4, 0x05BC, 0x05D5,
  0x05BC, 0x05D6, 0x05BC, 0x05D8, 0x05BC, 0x05D9, 0x05BC, 0x05DA, 0x05BC, 0x05DB, 0x05BC, 0x05DC,
  0x05BC, 0x05DE, 0x05BC, 0x05E0, 0x05BC, 0x05E1, 0x05BC, 0x05E3, 0x05BC, 0x05E4, 0x05BC, 0x05E6,
  0x05BC, 0x05E7, 0x05BC, 0x05E8, 0x05BC, 0x05E9, 0x05BC, 0x05EA, 0x05BC, 0x05D5, 0x05B9, 0x05D1,
  0x05BF, 0x05DB, 0x05BF, 0x05E4, 0x05BF, 0x05D0, 0x05DC,
};

// Inclusive [first, last] ranges of nonspacing marks (category Mn).
inline constexpr char32_t kMarkRanges[][2] = {
  {0x0300, 0x036F},
  {0x0483, 0x0487},
  {0x0591, 0x05BD},
  {0x05BF, 0x05BF},
  {0x05C1, 0x05C2},
  {0x05C4, 0x05C5},
  {0x05C7, 0x05C7},
  {0x0610, 0x061A},
  {0x064B, 0x065F},
  {0x0670, 0x0670},
  {0x06D6, 0x06DC},
  {0x06DF, 0x06E4},
  {0x06E7, 0x06E8},
  {0x06EA, 0x06ED},
  {0x0711, 0x0711},
  {0x0730, 0x074A},
  {0x07A6, 0x07B0},
  {0x07EB, 0x07F3},
  {0x07FD, 0x07FD},
  {0x0816, 0x0819},
  {0x081B, 0x0823},
  {0x0825, 0x0827},
  {0x0829, 0x082D},
  {0x0859, 0x085B},
  {0x08D3, 0x08E1},
  {0x08E3, 0x0902},
  {0x093A, 0x093A},
  {0x093C, 0x093C},
  {0x0941, 0x0948},
  {0x094D, 0x094D},
  {0x0951, 0x0957},
  {0x0962, 0x0963},
  {0x0981, 0x0981},
  {0x09BC, 0x09BC},
  {0x09C1, 0x09C4},
  {0x09CD, 0x09CD},
  {0x09E2, 0x09E3},
  {0x09FE, 0x09FE},
  {0x0A01, 0x0A02},
  {0x0A3C, 0x0A3C},
  {0x0A41, 0x0A42},
  {0x0A47, 0x0A48},
  {0x0A4B, 0x0A4D},
  {0x0A51, 0x0A51},
  {0x0A70, 0x0A71},
  {0x0A75, 0x0A75},
  {0x0A81, 0x0A82},
  {0x0ABC, 0x0ABC},
  {0x0AC1, 0x0AC5},
  {0x0AC7, 0x0AC8},
  {0x0ACD, 0x0ACD},
  {0x0AE2, 0x0AE3},
  {0x0AFA, 0x0AFF},
  {0x0B01, 0x0B01},
  {0x0B3C, 0x0B3C},
  {0x0B3F, 0x0B3F},
  {0x0B41, 0x0B44},
  {0x0B4D, 0x0B4D},
  {0x0B55, 0x0B56},
  {0x0B62, 0x0B63},
  {0x0B82, 0x0B82},
  {0x0BC0, 0x0BC0},
  {0x0BCD, 0x0BCD},
  {0x0C00, 0x0C00},
  {0x0C04, 0x0C04},
  {0x0C3E, 0x0C40},
  {0x0C46, 0x0C48},
  {0x0C4A, 0x0C4D},
  {0x0C55, 0x0C56},
  {0x0C62, 0x0C63},
  {0x0C81, 0x0C81},
  {0x0CBC, 0x0CBC},
  {0x0CBF, 0x0CBF},
  {0x0CC6, 0x0CC6},
  {0x0CCC, 0x0CCD},
  {0x0CE2, 0x0CE3},
  {0x0D00, 0x0D01},
  {0x0D3B, 0x0D3C},
  {0x0D41, 0x0D44},
  {0x0D4D, 0x0D4D},
  {0x0D62, 0x0D63},
  {0x0D81, 0x0D81},
  {0x0DCA, 0x0DCA},
  {0x0DD2, 0x0DD4},
  {0x0DD6, 0x0DD6},
  {0x0E31, 0x0E31},
  {0x0E34, 0x0E3A},
  {0x0E47, 0x0E4E},
  {0x0EB1, 0x0EB1},
  {0x0EB4, 0x0EBC},
  {0x0EC8, 0x0ECD},
  {0x0F18, 0x0F19},
  {0x0F35, 0x0F35},
  {0x0F37, 0x0F37},
  {0x0F39, 0x0F39},
  {0x0F71, 0x0F7E},
  {0x0F80, 0x0F84},
  {0x0F86, 0x0F87},
  {0x0F8D, 0x0F97},
  {0x0F99, 0x0FBC},
  {0x0FC6, 0x0FC6},
  {0x102D, 0x1030},
  {0x1032, 0x1037},
  {0x1039, 0x103A},
  {0x103D, 0x103E},
  {0x1058, 0x1059},
  {0x105E, 0x1060},
  {0x1071, 0x1074},
  {0x1082, 0x1082},
  {0x1085, 0x1086},
  {0x108D, 0x108D},
  {0x109D, 0x109D},
  {0x135D, 0x135F},
  {0x1712, 0x1714},
  {0x1732, 0x1734},
  {0x1752, 0x1753},
  {0x1772, 0x1773},
  {0x17B4, 0x17B5},
  {0x17B7, 0x17BD},
  {0x17C6, 0x17C6},
  {0x17C9, 0x17D3},
  {0x17DD, 0x17DD},
  {0x180B, 0x180D},
  {0x1885, 0x1886},
  {0x18A9, 0x18A9},
  {0x1920, 0x1922},
  {0x1927, 0x1928},
  {0x1932, 0x1932},
  {0x1939, 0x193B},
  {0x1A17, 0x1A18},
  {0x1A1B, 0x1A1B},
  {0x1A56, 0x1A56},
  {0x1A58, 0x1A5E},
  {0x1A60, 0x1A60},
  {0x1A62, 0x1A62},
  {0x1A65, 0x1A6C},
  {0x1A73, 0x1A7C},
  {0x1A7F, 0x1A7F},
  {0x1AB0, 0x1ABD},
  {0x1ABF, 0x1AC0},
  {0x1B00, 0x1B03},
  {0x1B34, 0x1B34},
  {0x1B36, 0x1B3A},
  {0x1B3C, 0x1B3C},
  {0x1B42, 0x1B42},
  {0x1B6B, 0x1B73},
  {0x1B80, 0x1B81},
  {0x1BA2, 0x1BA5},
  {0x1BA8, 0x1BA9},
  {0x1BAB, 0x1BAD},
  {0x1BE6, 0x1BE6},
  {0x1BE8, 0x1BE9},
  {0x1BED, 0x1BED},
  {0x1BEF, 0x1BF1},
  {0x1C2C, 0x1C33},
  {0x1C36, 0x1C37},
  {0x1CD0, 0x1CD2},
  {0x1CD4, 0x1CE0},
  {0x1CE2, 0x1CE8},
  {0x1CED, 0x1CED},
  {0x1CF4, 0x1CF4},
  {0x1CF8, 0x1CF9},
  {0x1DC0, 0x1DF9},
  {0x1DFB, 0x1DFF},
  {0x20D0, 0x20DC},
  {0x20E1, 0x20E1},
  {0x20E5, 0x20F0},
  {0x2CEF, 0x2CF1},
  {0x2D7F, 0x2D7F},
  {0x2DE0, 0x2DFF},
  {0x302A, 0x302D},
  {0x3099, 0x309A},
  {0xA66F, 0xA66F},
  {0xA674, 0xA67D},
  {0xA69E, 0xA69F},
  {0xA6F0, 0xA6F1},
  {0xA802, 0xA802},
  {0xA806, 0xA806},
  {0xA80B, 0xA80B},
  {0xA825, 0xA826},
  {0xA82C, 0xA82C},
  {0xA8C4, 0xA8C5},
  {0xA8E0, 0xA8F1},
  {0xA8FF, 0xA8FF},
  {0xA926, 0xA92D},
  {0xA947, 0xA951},
  {0xA980, 0xA982},
  {0xA9B3, 0xA9B3},
  {0xA9B6, 0xA9B9},
  {0xA9BC, 0xA9BD},
  {0xA9E5, 0xA9E5},
  {0xAA29, 0xAA2E},
  {0xAA31, 0xAA32},
  {0xAA35, 0xAA36},
  {0xAA43, 0xAA43},
  {0xAA4C, 0xAA4C},
  {0xAA7C, 0xAA7C},
  {0xAAB0, 0xAAB0},
  {0xAAB2, 0xAAB4},
  {0xAAB7, 0xAAB8},
  {0xAABE, 0xAABF},
  {0xAAC1, 0xAAC1},
  {0xAAEC, 0xAAED},
  {0xAAF6, 0xAAF6},
  {0xABE5, 0xABE5},
  {0xABE8, 0xABE8},
  {0xABED, 0xABED},
  {0xFB1E, 0xFB1E},
  {0xFE00, 0xFE0F},
  {0xFE20, 0xFE2F},
  {0x101FD, 0x101FD},
  {0x102E0, 0x102E0},
  {0x10376, 0x1037A},
  {0x10A01, 0x10A03},
  {0x10A05, 0x10A06},
  {0x10A0C, 0x10A0F},
  {0x10A38, 0x10A3A},
  {0x10A3F, 0x10A3F},
  {0x10AE5, 0x10AE6},
  {0x10D24, 0x10D27},
  {0x10EAB, 0x10EAC},
  {0x10F46, 0x10F50},
  {0x11001, 0x11001},
  {0x11038, 0x11046},
  {0x1107F, 0x11081},
  {0x110B3, 0x110B6},
  {0x110B9, 0x110BA},
  {0x11100, 0x11102},
  {0x11127, 0x1112B},
  {0x1112D, 0x11134},
  {0x11173, 0x11173},
  {0x11180, 0x11181},
  {0x111B6, 0x111BE},
  {0x111C9, 0x111CC},
  {0x111CF, 0x111CF},
  {0x1122F, 0x11231},
  {0x11234, 0x11234},
  {0x11236, 0x11237},
  {0x1123E, 0x1123E},
  {0x112DF, 0x112DF},
  {0x112E3, 0x112EA},
  {0x11300, 0x11301},
  {0x1133B, 0x1133C},
  {0x11340, 0x11340},
  {0x11366, 0x1136C},
  {0x11370, 0x11374},
  {0x11438, 0x1143F},
  {0x11442, 0x11444},
  {0x11446, 0x11446},
  {0x1145E, 0x1145E},
  {0x114B3, 0x114B8},
  {0x114BA, 0x114BA},
  {0x114BF, 0x114C0},
  {0x114C2, 0x114C3},
  {0x115B2, 0x115B5},
  {0x115BC, 0x115BD},
  {0x115BF, 0x115C0},
  {0x115DC, 0x115DD},
  {0x11633, 0x1163A},
  {0x1163D, 0x1163D},
  {0x1163F, 0x11640},
  {0x116AB, 0x116AB},
  {0x116AD, 0x116AD},
  {0x116B0, 0x116B5},
  {0x116B7, 0x116B7},
  {0x1171D, 0x1171F},
  {0x11722, 0x11725},
  {0x11727, 0x1172B},
  {0x1182F, 0x11837},
  {0x11839, 0x1183A},
  {0x1193B, 0x1193C},
  {0x1193E, 0x1193E},
  {0x11943, 0x11943},
  {0x119D4, 0x119D7},
  {0x119DA, 0x119DB},
  {0x119E0, 0x119E0},
  {0x11A01, 0x11A0A},
  {0x11A33, 0x11A38},
  {0x11A3B, 0x11A3E},
  {0x11A47, 0x11A47},
  {0x11A51, 0x11A56},
  {0x11A59, 0x11A5B},
  {0x11A8A, 0x11A96},
  {0x11A98, 0x11A99},
  {0x11C30, 0x11C36},
  {0x11C38, 0x11C3D},
  {0x11C3F, 0x11C3F},
  {0x11C92, 0x11CA7},
  {0x11CAA, 0x11CB0},
  {0x11CB2, 0x11CB3},
  {0x11CB5, 0x11CB6},
  {0x11D31, 0x11D36},
  {0x11D3A, 0x11D3A},
  {0x11D3C, 0x11D3D},
  {0x11D3F, 0x11D45},
  {0x11D47, 0x11D47},
  {0x11D90, 0x11D91},
  {0x11D95, 0x11D95},
  {0x11D97, 0x11D97},
  {0x11EF3, 0x11EF4},
  {0x16AF0, 0x16AF4},
  {0x16B30, 0x16B36},
  {0x16F4F, 0x16F4F},
  {0x16F8F, 0x16F92},
  {0x16FE4, 0x16FE4},
  {0x1BC9D, 0x1BC9E},
  {0x1D167, 0x1D169},
  {0x1D17B, 0x1D182},
  {0x1D185, 0x1D18B},
  {0x1D1AA, 0x1D1AD},
  {0x1D242, 0x1D244},
  {0x1DA00, 0x1DA36},
  {0x1DA3B, 0x1DA6C},
  {0x1DA75, 0x1DA75},
  {0x1DA84, 0x1DA84},
  {0x1DA9B, 0x1DA9F},
  {0x1DAA1, 0x1DAAF},
  {0x1E000, 0x1E006},
  {0x1E008, 0x1E018},
  {0x1E01B, 0x1E021},
  {0x1E023, 0x1E024},
  {0x1E026, 0x1E02A},
  {0x1E130, 0x1E136},
  {0x1E2EC, 0x1E2EF},
  {0x1E8D0, 0x1E8D6},
  {0x1E944, 0x1E94A},
  {0xE0100, 0xE01EF},
};

}  // namespace nomen::detail
