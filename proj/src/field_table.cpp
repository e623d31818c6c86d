// Generated by tools/gen_field_table.py. Do not edit.
#include "dlpar/field.hpp"

namespace dlpar {

const std::vector<PrimitivePoly>& primitive_polys()
{
    static const std::vector<PrimitivePoly> table = {
        {2, 1, {1}},
        {2, 2, {1, 1}},
        {2, 3, {1, 1, 0}},
        {2, 4, {1, 1, 0, 0}},
        {2, 5, {1, 0, 1, 0, 0}},
        {2, 6, {1, 1, 0, 0, 0, 0}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0}},
        {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0}},
        {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
        {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
        {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0}},
        {3, 1, {1}},
        {3, 2, {2, 1}},
        {3, 3, {1, 2, 0}},
        {3, 4, {2, 1, 0, 0}},
        {3, 5, {1, 2, 0, 0, 0}},
        {3, 6, {2, 1, 0, 0, 0, 0}},
        {3, 7, {1, 2, 1, 0, 0, 0, 0}},
        {5, 1, {2}},
        {5, 2, {2, 1}},
        {5, 3, {2, 3, 0}},
        {5, 4, {2, 2, 1, 0}},
        {5, 5, {2, 4, 0, 0, 0}},
        {7, 1, {2}},
        {7, 2, {3, 1}},
        {7, 3, {2, 3, 0}},
        {7, 4, {5, 3, 1, 0}},
        {11, 1, {3}},
        {11, 2, {7, 1}},
        {11, 3, {4, 1, 0}},
        {13, 1, {2}},
        {13, 2, {2, 1}},
        {13, 3, {6, 1, 0}},
        {17, 1, {3}},
        {17, 2, {3, 1}},
        {19, 1, {4}},
        {19, 2, {2, 1}},
        {23, 1, {2}},
        {23, 2, {7, 1}},
        {29, 1, {2}},
        {29, 2, {3, 1}},
        {31, 1, {7}},
        {31, 2, {12, 1}},
        {37, 1, {2}},
        {37, 2, {5, 1}},
        {41, 1, {6}},
        {41, 2, {12, 1}},
        {43, 1, {9}},
        {43, 2, {3, 1}},
        {47, 1, {2}},
        {47, 2, {13, 1}},
        {53, 1, {2}},
        {53, 2, {5, 1}},
        {59, 1, {3}},
        {59, 2, {2, 1}},
        {61, 1, {2}},
        {61, 2, {2, 1}},
        {67, 1, {4}},
        {71, 1, {2}},
        {73, 1, {5}},
        {79, 1, {2}},
        {83, 1, {3}},
        {89, 1, {3}},
        {97, 1, {5}},
        {101, 1, {2}},
        {103, 1, {2}},
        {107, 1, {3}},
        {109, 1, {6}},
        {113, 1, {3}},
        {127, 1, {9}},
        {131, 1, {3}},
        {137, 1, {3}},
        {139, 1, {4}},
        {149, 1, {2}},
        {151, 1, {5}},
        {157, 1, {5}},
        {163, 1, {4}},
        {167, 1, {2}},
        {173, 1, {2}},
        {179, 1, {3}},
        {181, 1, {2}},
        {191, 1, {2}},
        {193, 1, {5}},
        {197, 1, {2}},
        {199, 1, {2}},
        {211, 1, {4}},
        {223, 1, {9}},
        {227, 1, {3}},
        {229, 1, {6}},
        {233, 1, {3}},
        {239, 1, {2}},
        {241, 1, {7}},
        {251, 1, {3}},
        {257, 1, {3}},
        {263, 1, {2}},
        {269, 1, {2}},
        {271, 1, {2}},
        {277, 1, {5}},
        {281, 1, {3}},
        {283, 1, {6}},
        {293, 1, {2}},
        {307, 1, {7}},
        {311, 1, {2}},
        {313, 1, {10}},
        {317, 1, {2}},
        {331, 1, {5}},
        {337, 1, {10}},
        {347, 1, {3}},
        {349, 1, {2}},
        {353, 1, {3}},
        {359, 1, {2}},
        {367, 1, {2}},
        {373, 1, {2}},
        {379, 1, {4}},
        {383, 1, {2}},
        {389, 1, {2}},
        {397, 1, {5}},
        {401, 1, {3}},
        {409, 1, {21}},
        {419, 1, {3}},
        {421, 1, {2}},
        {431, 1, {5}},
        {433, 1, {5}},
        {439, 1, {5}},
        {443, 1, {3}},
        {449, 1, {3}},
        {457, 1, {13}},
        {461, 1, {2}},
        {463, 1, {2}},
        {467, 1, {3}},
        {479, 1, {2}},
        {487, 1, {2}},
        {491, 1, {4}},
        {499, 1, {5}},
        {503, 1, {2}},
        {509, 1, {2}},
        {521, 1, {3}},
        {523, 1, {4}},
        {541, 1, {2}},
        {547, 1, {4}},
        {557, 1, {2}},
        {563, 1, {3}},
        {569, 1, {3}},
        {571, 1, {5}},
        {577, 1, {5}},
        {587, 1, {3}},
        {593, 1, {3}},
        {599, 1, {2}},
        {601, 1, {7}},
        {607, 1, {2}},
        {613, 1, {2}},
        {617, 1, {3}},
        {619, 1, {4}},
        {631, 1, {9}},
        {641, 1, {3}},
        {643, 1, {7}},
        {647, 1, {2}},
        {653, 1, {2}},
        {659, 1, {3}},
        {661, 1, {2}},
        {673, 1, {5}},
        {677, 1, {2}},
        {683, 1, {10}},
        {691, 1, {6}},
        {701, 1, {2}},
        {709, 1, {2}},
        {719, 1, {2}},
        {727, 1, {7}},
        {733, 1, {6}},
        {739, 1, {6}},
        {743, 1, {2}},
        {751, 1, {2}},
        {757, 1, {2}},
        {761, 1, {6}},
        {769, 1, {11}},
        {773, 1, {2}},
        {787, 1, {4}},
        {797, 1, {2}},
        {809, 1, {3}},
        {811, 1, {5}},
        {821, 1, {2}},
        {823, 1, {2}},
        {827, 1, {3}},
        {829, 1, {2}},
        {839, 1, {2}},
        {853, 1, {2}},
        {857, 1, {3}},
        {859, 1, {4}},
        {863, 1, {2}},
        {877, 1, {2}},
        {881, 1, {3}},
        {883, 1, {4}},
        {887, 1, {2}},
        {907, 1, {4}},
        {911, 1, {3}},
        {919, 1, {5}},
        {929, 1, {3}},
        {937, 1, {5}},
        {941, 1, {2}},
        {947, 1, {3}},
        {953, 1, {3}},
        {967, 1, {2}},
        {971, 1, {3}},
        {977, 1, {3}},
        {983, 1, {2}},
        {991, 1, {2}},
        {997, 1, {7}},
        {1009, 1, {11}},
        {1013, 1, {3}},
        {1019, 1, {3}},
        {1021, 1, {10}},
        {1031, 1, {2}},
        {1033, 1, {5}},
        {1039, 1, {2}},
        {1049, 1, {3}},
        {1051, 1, {5}},
        {1061, 1, {2}},
        {1063, 1, {2}},
        {1069, 1, {6}},
        {1087, 1, {2}},
        {1091, 1, {4}},
        {1093, 1, {5}},
        {1097, 1, {3}},
        {1103, 1, {3}},
        {1109, 1, {2}},
        {1117, 1, {2}},
        {1123, 1, {4}},
        {1129, 1, {11}},
        {1151, 1, {2}},
        {1153, 1, {5}},
        {1163, 1, {3}},
        {1171, 1, {4}},
        {1181, 1, {7}},
        {1187, 1, {3}},
        {1193, 1, {3}},
        {1201, 1, {11}},
        {1213, 1, {2}},
        {1217, 1, {3}},
        {1223, 1, {2}},
        {1229, 1, {2}},
        {1231, 1, {2}},
        {1237, 1, {2}},
        {1249, 1, {7}},
        {1259, 1, {3}},
        {1277, 1, {2}},
        {1279, 1, {2}},
        {1283, 1, {3}},
        {1289, 1, {6}},
        {1291, 1, {4}},
        {1297, 1, {10}},
        {1301, 1, {2}},
        {1303, 1, {2}},
        {1307, 1, {3}},
        {1319, 1, {2}},
        {1321, 1, {13}},
        {1327, 1, {9}},
        {1361, 1, {3}},
        {1367, 1, {2}},
        {1373, 1, {2}},
        {1381, 1, {2}},
        {1399, 1, {5}},
        {1409, 1, {3}},
        {1423, 1, {9}},
        {1427, 1, {3}},
        {1429, 1, {6}},
        {1433, 1, {3}},
        {1439, 1, {2}},
        {1447, 1, {2}},
        {1451, 1, {3}},
        {1453, 1, {2}},
        {1459, 1, {6}},
        {1471, 1, {5}},
        {1481, 1, {3}},
        {1483, 1, {4}},
        {1487, 1, {2}},
        {1489, 1, {14}},
        {1493, 1, {2}},
        {1499, 1, {3}},
        {1511, 1, {2}},
        {1523, 1, {3}},
        {1531, 1, {4}},
        {1543, 1, {2}},
        {1549, 1, {2}},
        {1553, 1, {3}},
        {1559, 1, {2}},
        {1567, 1, {2}},
        {1571, 1, {3}},
        {1579, 1, {5}},
        {1583, 1, {2}},
        {1597, 1, {11}},
        {1601, 1, {3}},
        {1607, 1, {2}},
        {1609, 1, {7}},
        {1613, 1, {3}},
        {1619, 1, {3}},
        {1621, 1, {2}},
        {1627, 1, {6}},
        {1637, 1, {2}},
        {1657, 1, {11}},
        {1663, 1, {2}},
        {1667, 1, {3}},
        {1669, 1, {2}},
        {1693, 1, {2}},
        {1697, 1, {3}},
        {1699, 1, {6}},
        {1709, 1, {3}},
        {1721, 1, {3}},
        {1723, 1, {6}},
        {1733, 1, {2}},
        {1741, 1, {2}},
        {1747, 1, {4}},
        {1753, 1, {7}},
        {1759, 1, {2}},
        {1777, 1, {5}},
        {1783, 1, {2}},
        {1787, 1, {3}},
        {1789, 1, {6}},
        {1801, 1, {11}},
        {1811, 1, {3}},
        {1823, 1, {2}},
        {1831, 1, {9}},
        {1847, 1, {2}},
        {1861, 1, {2}},
        {1867, 1, {4}},
        {1871, 1, {2}},
        {1873, 1, {10}},
        {1877, 1, {2}},
        {1879, 1, {2}},
        {1889, 1, {3}},
        {1901, 1, {2}},
        {1907, 1, {3}},
        {1913, 1, {3}},
        {1931, 1, {3}},
        {1933, 1, {5}},
        {1949, 1, {2}},
        {1951, 1, {2}},
        {1973, 1, {2}},
        {1979, 1, {3}},
        {1987, 1, {4}},
        {1993, 1, {5}},
        {1997, 1, {2}},
        {1999, 1, {5}},
        {2003, 1, {3}},
        {2011, 1, {5}},
        {2017, 1, {5}},
        {2027, 1, {3}},
        {2029, 1, {2}},
        {2039, 1, {2}},
        {2053, 1, {2}},
        {2063, 1, {2}},
        {2069, 1, {2}},
        {2081, 1, {3}},
        {2083, 1, {4}},
        {2087, 1, {2}},
        {2089, 1, {7}},
        {2099, 1, {3}},
        {2111, 1, {2}},
        {2113, 1, {5}},
        {2129, 1, {3}},
        {2131, 1, {4}},
        {2137, 1, {10}},
        {2141, 1, {2}},
        {2143, 1, {9}},
        {2153, 1, {3}},
        {2161, 1, {23}},
        {2179, 1, {5}},
        {2203, 1, {7}},
        {2207, 1, {2}},
        {2213, 1, {2}},
        {2221, 1, {2}},
        {2237, 1, {2}},
        {2239, 1, {2}},
        {2243, 1, {3}},
        {2251, 1, {5}},
        {2267, 1, {3}},
        {2269, 1, {2}},
        {2273, 1, {3}},
        {2281, 1, {7}},
        {2287, 1, {7}},
        {2293, 1, {2}},
        {2297, 1, {5}},
        {2309, 1, {2}},
        {2311, 1, {2}},
        {2333, 1, {2}},
        {2339, 1, {3}},
        {2341, 1, {7}},
        {2347, 1, {6}},
        {2351, 1, {3}},
        {2357, 1, {2}},
        {2371, 1, {4}},
        {2377, 1, {5}},
        {2381, 1, {3}},
        {2383, 1, {13}},
        {2389, 1, {2}},
        {2393, 1, {3}},
        {2399, 1, {2}},
        {2411, 1, {3}},
        {2417, 1, {3}},
        {2423, 1, {2}},
        {2437, 1, {2}},
        {2441, 1, {6}},
        {2447, 1, {2}},
        {2459, 1, {3}},
        {2467, 1, {4}},
        {2473, 1, {5}},
        {2477, 1, {2}},
        {2503, 1, {2}},
        {2521, 1, {17}},
        {2531, 1, {3}},
        {2539, 1, {4}},
        {2543, 1, {2}},
        {2549, 1, {2}},
        {2551, 1, {2}},
        {2557, 1, {2}},
        {2579, 1, {3}},
        {2591, 1, {2}},
        {2593, 1, {7}},
        {2609, 1, {3}},
        {2617, 1, {5}},
        {2621, 1, {2}},
        {2633, 1, {3}},
        {2647, 1, {2}},
        {2657, 1, {3}},
        {2659, 1, {4}},
        {2663, 1, {2}},
        {2671, 1, {5}},
        {2677, 1, {2}},
        {2683, 1, {4}},
        {2687, 1, {3}},
        {2689, 1, {19}},
        {2693, 1, {2}},
        {2699, 1, {3}},
        {2707, 1, {4}},
        {2711, 1, {2}},
        {2713, 1, {5}},
        {2719, 1, {2}},
        {2729, 1, {3}},
        {2731, 1, {5}},
        {2741, 1, {2}},
        {2749, 1, {6}},
        {2753, 1, {3}},
        {2767, 1, {9}},
        {2777, 1, {3}},
        {2789, 1, {2}},
        {2791, 1, {7}},
        {2797, 1, {2}},
        {2801, 1, {3}},
        {2803, 1, {4}},
        {2819, 1, {3}},
        {2833, 1, {5}},
        {2837, 1, {2}},
        {2843, 1, {4}},
        {2851, 1, {4}},
        {2857, 1, {11}},
        {2861, 1, {2}},
        {2879, 1, {2}},
        {2887, 1, {2}},
        {2897, 1, {3}},
        {2903, 1, {2}},
        {2909, 1, {2}},
        {2917, 1, {5}},
        {2927, 1, {2}},
        {2939, 1, {3}},
        {2953, 1, {13}},
        {2957, 1, {2}},
        {2963, 1, {3}},
        {2969, 1, {3}},
        {2971, 1, {5}},
        {2999, 1, {2}},
        {3001, 1, {14}},
        {3011, 1, {3}},
        {3019, 1, {4}},
        {3023, 1, {2}},
        {3037, 1, {2}},
        {3041, 1, {3}},
        {3049, 1, {11}},
        {3061, 1, {6}},
        {3067, 1, {4}},
        {3079, 1, {2}},
        {3083, 1, {3}},
        {3089, 1, {3}},
        {3109, 1, {6}},
        {3119, 1, {2}},
        {3121, 1, {7}},
        {3137, 1, {3}},
        {3163, 1, {6}},
        {3167, 1, {2}},
        {3169, 1, {7}},
        {3181, 1, {7}},
        {3187, 1, {4}},
        {3191, 1, {5}},
        {3203, 1, {3}},
        {3209, 1, {3}},
        {3217, 1, {5}},
        {3221, 1, {10}},
        {3229, 1, {6}},
        {3251, 1, {3}},
        {3253, 1, {2}},
        {3257, 1, {3}},
        {3259, 1, {5}},
        {3271, 1, {5}},
        {3299, 1, {3}},
        {3301, 1, {6}},
        {3307, 1, {4}},
        {3313, 1, {10}},
        {3319, 1, {2}},
        {3323, 1, {3}},
        {3329, 1, {3}},
        {3331, 1, {5}},
        {3343, 1, {11}},
        {3347, 1, {3}},
        {3359, 1, {2}},
        {3361, 1, {22}},
        {3371, 1, {3}},
        {3373, 1, {5}},
        {3389, 1, {3}},
        {3391, 1, {5}},
        {3407, 1, {2}},
        {3413, 1, {2}},
        {3433, 1, {5}},
        {3449, 1, {3}},
        {3457, 1, {7}},
        {3461, 1, {2}},
        {3463, 1, {9}},
        {3467, 1, {3}},
        {3469, 1, {2}},
        {3491, 1, {3}},
        {3499, 1, {4}},
        {3511, 1, {2}},
        {3517, 1, {2}},
        {3527, 1, {2}},
        {3529, 1, {17}},
        {3533, 1, {2}},
        {3539, 1, {3}},
        {3541, 1, {7}},
        {3547, 1, {4}},
        {3557, 1, {2}},
        {3559, 1, {2}},
        {3571, 1, {4}},
        {3581, 1, {2}},
        {3583, 1, {2}},
        {3593, 1, {3}},
        {3607, 1, {11}},
        {3613, 1, {2}},
        {3617, 1, {3}},
        {3623, 1, {2}},
        {3631, 1, {10}},
        {3637, 1, {2}},
        {3643, 1, {4}},
        {3659, 1, {3}},
        {3671, 1, {2}},
        {3673, 1, {5}},
        {3677, 1, {2}},
        {3691, 1, {4}},
        {3697, 1, {5}},
        {3701, 1, {2}},
        {3709, 1, {2}},
        {3719, 1, {2}},
        {3727, 1, {2}},
        {3733, 1, {2}},
        {3739, 1, {5}},
        {3761, 1, {3}},
        {3767, 1, {2}},
        {3769, 1, {7}},
        {3779, 1, {3}},
        {3793, 1, {5}},
        {3797, 1, {2}},
        {3803, 1, {3}},
        {3821, 1, {3}},
        {3823, 1, {9}},
        {3833, 1, {3}},
        {3847, 1, {2}},
        {3851, 1, {4}},
        {3853, 1, {2}},
        {3863, 1, {2}},
        {3877, 1, {2}},
        {3881, 1, {13}},
        {3889, 1, {11}},
        {3907, 1, {4}},
        {3911, 1, {2}},
        {3917, 1, {2}},
        {3919, 1, {2}},
        {3923, 1, {3}},
        {3929, 1, {3}},
        {3931, 1, {4}},
        {3943, 1, {9}},
        {3947, 1, {3}},
        {3967, 1, {2}},
        {3989, 1, {2}},
        {4001, 1, {3}},
        {4003, 1, {4}},
        {4007, 1, {2}},
        {4013, 1, {2}},
        {4019, 1, {4}},
        {4021, 1, {2}},
        {4027, 1, {6}},
        {4049, 1, {3}},
        {4051, 1, {5}},
        {4057, 1, {5}},
        {4073, 1, {3}},
        {4079, 1, {2}},
        {4091, 1, {3}},
        {4093, 1, {2}},
    };
    return table;
}

}  // namespace dlpar
