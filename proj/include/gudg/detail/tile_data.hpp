#pragma once

// Generated by tools/tile_design/export_header.py; do not edit.

#include <cstdint>
#include <span>

namespace gudg::detail {

struct TilePoint {
    const char* name;
    std::int64_t x;
    std::int64_t y;
};

inline constexpr TilePoint kB1[] = {
    {"F", -2192, -5557},
    {"N1", -2419, 5622},
    {"N2", -683, 366},
    {"T1", -6122, 16296},
    {"T2", -4763, 10666},
    {"a1", 17004, -7689},
    {"a2", -14741, -8528},
    {"a3", 16995, 2628},
    {"b1", 17067, -7509},
    {"b2", -12349, -9310},
    {"b3", 17331, 4194},
    {"f1,0", 7914, -4377},
    {"f1,1", 9151, -14087},
    {"f1,10", 28703, -42100},
    {"f1,11", 21512, -42653},
    {"f1,12", 15100, -44900},
    {"f1,13", 10000, -50000},
    {"f1,14", 10000, -60000},
    {"f1,2", 13151, -19214},
    {"f1,3", 18287, -20037},
    {"f1,4", 24878, -21233},
    {"f1,5", 31847, -19374},
    {"f1,6", 37516, -19806},
    {"f1,7", 39497, -26741},
    {"f1,8", 39710, -33172},
    {"f1,9", 34374, -38024},
    {"f2,0", -10669, -118},
    {"f2,1", -18290, 1142},
    {"f2,10", -45974, -21992},
    {"f2,11", -40883, -16613},
    {"f2,12", -43349, -9564},
    {"f2,13", -50000, -10000},
    {"f2,14", -60000, -10000},
    {"f2,2", -23021, 3873},
    {"f2,3", -28809, 2026},
    {"f2,4", -30467, -3423},
    {"f2,5", -32567, -8068},
    {"f2,6", -30756, -13801},
    {"f2,7", -30674, -19853},
    {"f2,8", -34093, -25245},
    {"f2,9", -38624, -27931},
    {"f3,0", 7771, 5404},
    {"f3,1", 13306, 13478},
    {"f3,10", 26417, 42868},
    {"f3,11", 19623, 42302},
    {"f3,12", 14091, 44546},
    {"f3,13", 10000, 50000},
    {"f3,14", 10000, 60000},
    {"f3,2", 18629, 14682},
    {"f3,3", 24220, 12390},
    {"f3,4", 29576, 13788},
    {"f3,5", 35674, 16837},
    {"f3,6", 38281, 22208},
    {"f3,7", 38734, 29010},
    {"f3,8", 36914, 34896},
    {"f3,9", 31869, 39482},
    {"t1,0", -70, -9914},
    {"t1,1", -1265, -16119},
    {"t1,10", -23648, -48878},
    {"t1,11", -18800, -42309},
    {"t1,12", -13212, -43688},
    {"t1,13", -10000, -50000},
    {"t1,14", -10000, -60000},
    {"t1,2", -1185, -21242},
    {"t1,3", -7081, -25294},
    {"t1,4", -12668, -24756},
    {"t1,5", -17368, -27676},
    {"t1,6", -22275, -30024},
    {"t1,7", -25356, -34258},
    {"t1,8", -28848, -38523},
    {"t1,9", -30204, -43650},
    {"t2,0", -12058, 9359},
    {"t2,1", -16487, 12020},
    {"t2,10", -42509, 23224},
    {"t2,11", -41952, 17354},
    {"t2,12", -45347, 13136},
    {"t2,13", -50000, 10000},
    {"t2,14", -60000, 10000},
    {"t2,2", -21223, 14365},
    {"t2,3", -23158, 20391},
    {"t2,4", -25212, 25196},
    {"t2,5", -27154, 29943},
    {"t2,6", -30343, 34315},
    {"t2,7", -36372, 35367},
    {"t2,8", -41136, 33690},
    {"t2,9", -44653, 27888},
    {"t3,0", 3201, 14045},
    {"t3,1", 3997, 19528},
    {"t3,10", -19460, 38293},
    {"t3,11", -18878, 44439},
    {"t3,12", -14721, 47984},
    {"t3,13", -10000, 50000},
    {"t3,14", -10000, 60000},
    {"t3,2", 8303, 23321},
    {"t3,3", 11365, 28348},
    {"t3,4", 10073, 34398},
    {"t3,5", 4605, 36560},
    {"t3,6", -398, 35679},
    {"t3,7", -5158, 33070},
    {"t3,8", -10919, 32407},
    {"t3,9", -15817, 33793},
};

inline constexpr TilePoint kB2[] = {
    {"F", -2980, -5485},
    {"N1", -2928, 5695},
    {"N2", -1323, 398},
    {"T1", -6199, 15789},
    {"T2", -4884, 10803},
    {"a1", 16157, -8095},
    {"a2", -15241, -8523},
    {"a3", 16405, 2220},
    {"b1", 16224, -7916},
    {"b2", -12919, -9232},
    {"b3", 16780, 3776},
    {"f1,0", 7152, -4558},
    {"f1,1", 8147, -14295},
    {"f1,10", 36082, 2998},
    {"f1,11", 39503, 7002},
    {"f1,12", 44535, 9293},
    {"f1,13", 50000, 10000},
    {"f1,14", 60000, 10000},
    {"f1,2", 10208, -19188},
    {"f1,3", 15433, -21798},
    {"f1,4", 20601, -19146},
    {"f1,5", 25645, -19316},
    {"f1,6", 30744, -16910},
    {"f1,7", 33129, -12215},
    {"f1,8", 34473, -7244},
    {"f1,9", 32738, -1467},
    {"f2,0", -11318, 163},
    {"f2,1", -18863, 1581},
    {"f2,10", -45542, -22063},
    {"f2,11", -41849, -16378},
    {"f2,12", -43504, -10077},
    {"f2,13", -50000, -10000},
    {"f2,14", -60000, -10000},
    {"f2,2", -23224, 4040},
    {"f2,3", -29693, 1834},
    {"f2,4", -30506, -3374},
    {"f2,5", -32691, -8091},
    {"f2,6", -29813, -13716},
    {"f2,7", -29895, -19420},
    {"f2,8", -34241, -25695},
    {"f2,9", -38778, -28174},
    {"f3,0", 7253, 5224},
    {"f3,1", 12987, 13157},
    {"f3,10", 26279, 42275},
    {"f3,11", 19579, 42124},
    {"f3,12", 14401, 44623},
    {"f3,13", 10000, 50000},
    {"f3,14", 10000, 60000},
    {"f3,2", 19099, 14743},
    {"f3,3", 23659, 12179},
    {"f3,4", 29656, 13601},
    {"f3,5", 35768, 17141},
    {"f3,6", 37621, 22309},
    {"f3,7", 39224, 28891},
    {"f3,8", 36590, 35197},
    {"f3,9", 31971, 39841},
    {"t1,0", -967, -9894},
    {"t1,1", -2963, -17751},
    {"t1,10", 39870, -24009},
    {"t1,11", 43952, -19729},
    {"t1,12", 47489, -14845},
    {"t1,13", 50000, -10000},
    {"t1,14", 60000, -10000},
    {"t1,2", 254, -22039},
    {"t1,3", 2949, -27023},
    {"t1,4", 8405, -29369},
    {"t1,5", 14090, -32045},
    {"t1,6", 19499, -32488},
    {"t1,7", 25586, -32996},
    {"t1,8", 30713, -30482},
    {"t1,9", 35687, -28577},
    {"t2,0", -12445, 9636},
    {"t2,1", -16851, 12632},
    {"t2,10", -42255, 22780},
    {"t2,11", -41475, 17404},
    {"t2,12", -45527, 12849},
    {"t2,13", -50000, 10000},
    {"t2,14", -60000, 10000},
    {"t2,2", -22028, 14709},
    {"t2,3", -23829, 20309},
    {"t2,4", -25420, 25117},
    {"t2,5", -27291, 30099},
    {"t2,6", -30848, 34958},
    {"t2,7", -36436, 35527},
    {"t2,8", -41052, 33548},
    {"t2,9", -44761, 28105},
    {"t3,0", 2899, 13976},
    {"t3,1", 3995, 19736},
    {"t3,10", -19350, 38188},
    {"t3,11", -18516, 43963},
    {"t3,12", -14611, 47857},
    {"t3,13", -10000, 50000},
    {"t3,14", -10000, 60000},
    {"t3,2", 8493, 22884},
    {"t3,3", 11394, 28452},
    {"t3,4", 9706, 34002},
    {"t3,5", 4557, 36161},
    {"t3,6", -540, 35729},
    {"t3,7", -5217, 32866},
    {"t3,8", -10412, 32646},
    {"t3,9", -15686, 33544},
};

inline constexpr TilePoint kB3[] = {
    {"F", -2509, -5957},
    {"N1", -2688, 5222},
    {"N2", -974, -41},
    {"T1", -6292, 15831},
    {"T2", -4428, 10527},
    {"a1", 16677, -8173},
    {"a2", -14805, -9246},
    {"a3", 16713, 2145},
    {"b1", 16740, -7993},
    {"b2", -12420, -9940},
    {"b3", 17056, 3708},
    {"f1,0", 7601, -4822},
    {"f1,1", 8797, -14537},
    {"f1,10", 27544, -43000},
    {"f1,11", 20729, -43000},
    {"f1,12", 14819, -45181},
    {"f1,13", 10000, -50000},
    {"f1,14", 10000, -60000},
    {"f1,2", 12628, -20828},
    {"f1,3", 17425, -22614},
    {"f1,4", 22637, -24242},
    {"f1,5", 28803, -24000},
    {"f1,6", 34928, -25325},
    {"f1,7", 38836, -30908},
    {"f1,8", 38647, -35925},
    {"f1,9", 33373, -40240},
    {"f2,0", -10963, -482},
    {"f2,1", -20333, 1131},
    {"f2,10", -45483, -22451},
    {"f2,11", -41156, -16053},
    {"f2,12", -43295, -9569},
    {"f2,13", -50000, -10000},
    {"f2,14", -60000, -10000},
    {"f2,2", -24319, 4421},
    {"f2,3", -31015, 2697},
    {"f2,4", -31352, -3421},
    {"f2,5", -32767, -8567},
    {"f2,6", -30663, -14071},
    {"f2,7", -30634, -20294},
    {"f2,8", -33410, -26529},
    {"f2,9", -38953, -28266},
    {"f3,0", 7501, 4960},
    {"f3,1", 13070, 13010},
    {"f3,10", 37084, -2326},
    {"f3,11", 39038, -7339},
    {"f3,12", 44218, -9830},
    {"f3,13", 50000, -10000},
    {"f3,14", 60000, -10000},
    {"f3,2", 15026, 17844},
    {"f3,3", 19556, 21183},
    {"f3,4", 23486, 24376},
    {"f3,5", 29717, 22916},
    {"f3,6", 31552, 17655},
    {"f3,7", 34163, 13122},
    {"f3,8", 35302, 7923},
    {"f3,9", 35220, 2848},
    {"t1,0", -407, -10324},
    {"t1,1", -1380, -17001},
    {"t1,10", -23791, -49245},
    {"t1,11", -19022, -42006},
    {"t1,12", -13536, -42904},
    {"t1,13", -10000, -50000},
    {"t1,14", -10000, -60000},
    {"t1,2", -789, -22677},
    {"t1,3", -7110, -26716},
    {"t1,4", -12789, -24713},
    {"t1,5", -18167, -27755},
    {"t1,6", -22758, -30081},
    {"t1,7", -26135, -34495},
    {"t1,8", -29369, -38677},
    {"t1,9", -30688, -44045},
    {"t2,0", -12813, 8824},
    {"t2,1", -16831, 12184},
    {"t2,10", -42262, 23446},
    {"t2,11", -41461, 17641},
    {"t2,12", -44749, 13086},
    {"t2,13", -50000, 10000},
    {"t2,14", -60000, 10000},
    {"t2,2", -21811, 14465},
    {"t2,3", -23212, 20289},
    {"t2,4", -25291, 25481},
    {"t2,5", -27091, 30296},
    {"t2,6", -30556, 34715},
    {"t2,7", -36351, 35752},
    {"t2,8", -41326, 34195},
    {"t2,9", -44772, 28082},
    {"t3,0", 2968, 13621},
    {"t3,1", 4545, 20669},
    {"t3,10", 44107, 26715},
    {"t3,11", 44621, 20549},
    {"t3,12", 46039, 14753},
    {"t3,13", 50000, 10000},
    {"t3,14", 60000, 10000},
    {"t3,2", 7070, 25882},
    {"t3,3", 8689, 31853},
    {"t3,4", 13402, 35370},
    {"t3,5", 18850, 38304},
    {"t3,6", 24543, 39413},
    {"t3,7", 30572, 38022},
    {"t3,8", 36162, 35838},
    {"t3,9", 40537, 31463},
};

inline constexpr TilePoint kV11[] = {
    {"F", -6300, -13836},
    {"N1", -5400, -1620},
    {"N2", -4423, -7199},
    {"T1", -7405, 8483},
    {"T2", -6737, 3249},
    {"a1", 13607, -13454},
    {"a2", -21444, -13485},
    {"a3", 12912, -824},
    {"b1", 13648, -11114},
    {"b2", -18192, -15881},
    {"b3", 11703, 1460},
    {"f1,0", 3952, -12113},
    {"f1,1", 7010, -21364},
    {"f1,10", 27309, -43000},
    {"f1,11", 20573, -43000},
    {"f1,12", 14763, -45237},
    {"f1,13", 10000, -50000},
    {"f1,14", 10000, -60000},
    {"f1,2", 11383, -25122},
    {"f1,3", 16655, -26927},
    {"f1,4", 21739, -25966},
    {"f1,5", 28256, -26000},
    {"f1,6", 34569, -26813},
    {"f1,7", 38644, -31967},
    {"f1,8", 39096, -37216},
    {"f1,9", 33200, -41189},
    {"f2,0", -14172, -7019},
    {"f2,1", -23133, -3310},
    {"f2,10", 27659, 27765},
    {"f2,11", 35295, 21806},
    {"f2,12", 42928, 16046},
    {"f2,13", 50000, 10000},
    {"f2,14", 60000, 10000},
    {"f2,2", -28756, 4582},
    {"f2,3", -28970, 14329},
    {"f2,4", -25615, 23322},
    {"f2,5", -18648, 30142},
    {"f2,6", -9628, 33730},
    {"f2,7", -55, 35506},
    {"f2,8", 9579, 34567},
    {"f2,9", 18807, 31832},
    {"f3,0", 4684, -3718},
    {"t1,0", -2919, -18390},
    {"t1,1", -989, -27866},
    {"t1,10", -23676, -49250},
    {"t1,11", -18074, -42038},
    {"t1,12", -11637, -41652},
    {"t1,13", -10000, -50000},
    {"t1,14", -10000, -60000},
    {"t1,2", -5927, -31576},
    {"t1,3", -11642, -23902},
    {"t1,4", -17850, -26475},
    {"t1,5", -24192, -27136},
    {"t1,6", -28083, -31599},
    {"t1,7", -29064, -36733},
    {"t1,8", -33107, -41319},
    {"t1,9", -29038, -49184},
    {"t2,0", -14762, 2712},
    {"t2,1", -19248, 8562},
    {"t2,10", 33906, 8447},
    {"t2,11", 38211, 1068},
    {"t2,12", 42769, -6154},
    {"t2,13", 50000, -10000},
    {"t2,14", 60000, -10000},
    {"t2,2", -18678, 14745},
    {"t2,3", -15865, 19684},
    {"t2,4", -11047, 23150},
    {"t2,5", -3100, 25276},
    {"t2,6", 5294, 25124},
    {"t2,7", 13334, 22607},
    {"t2,8", 21084, 19359},
    {"t2,9", 27998, 14527},
    {"t3,0", 1916, 5630},
};

inline constexpr TilePoint kV12[] = {
    {"F", 629, -11412},
    {"N1", -134, -258},
    {"N2", 1852, -5424},
    {"T1", -4063, 10028},
    {"T2", -2389, 4633},
    {"a1", 19905, -12620},
    {"a2", -14429, -13567},
    {"a3", 19401, -2315},
    {"b1", 19959, -12437},
    {"b2", -11878, -15181},
    {"b3", 19662, -736},
    {"f1,0", 10666, -9749},
    {"f1,1", 12369, -19388},
    {"f1,10", 27613, -42184},
    {"f1,11", 20785, -42709},
    {"f1,12", 14842, -45158},
    {"f1,13", 10000, -50000},
    {"f1,14", 10000, -60000},
    {"f1,2", 13911, -24587},
    {"f1,3", 22053, -23961},
    {"f1,4", 28046, -20388},
    {"f1,5", 34663, -18623},
    {"f1,6", 38217, -22259},
    {"f1,7", 40098, -28843},
    {"f1,8", 38362, -34398},
    {"f1,9", 33295, -39004},
    {"f2,0", -8099, -6387},
    {"f3,0", 10054, 14},
    {"f3,1", 15195, 8344},
    {"f3,10", -36317, 33683},
    {"f3,11", -42981, 27019},
    {"f3,12", -45566, 18171},
    {"f3,13", -50000, 10000},
    {"f3,14", -60000, 10000},
    {"f3,2", 18935, 15282},
    {"f3,3", 18779, 24272},
    {"f3,4", 16190, 33334},
    {"f3,5", 8000, 37500},
    {"f3,6", -692, 41038},
    {"f3,7", -10102, 41561},
    {"f3,8", -19419, 41468},
    {"f3,9", -28243, 38159},
    {"t1,0", 2957, -15663},
    {"t1,1", 2270, -21926},
    {"t1,10", -23223, -49397},
    {"t1,11", -19082, -44738},
    {"t1,12", -12638, -44367},
    {"t1,13", -10000, -50000},
    {"t1,14", -10000, -60000},
    {"t1,2", 1257, -27347},
    {"t1,3", -4840, -29542},
    {"t1,4", -9976, -25729},
    {"t1,5", -15430, -29328},
    {"t1,6", -17708, -34286},
    {"t1,7", -24462, -34960},
    {"t1,8", -29281, -36540},
    {"t1,9", -29706, -44374},
    {"t2,0", -10413, 2883},
    {"t3,0", 5074, 8426},
    {"t3,1", 7479, 15531},
    {"t3,10", -38578, 7739},
    {"t3,11", -41309, 1108},
    {"t3,12", -44929, -4929},
    {"t3,13", -50000, -10000},
    {"t3,14", -60000, -10000},
    {"t3,2", 4403, 20411},
    {"t3,3", -221, 25892},
    {"t3,4", -6368, 28624},
    {"t3,5", -13467, 29638},
    {"t3,6", -20188, 28067},
    {"t3,7", -26698, 25062},
    {"t3,8", -31659, 20202},
    {"t3,9", -35771, 14327},
};

inline constexpr TilePoint kC1[] = {
    {"c1", -25359, 8312},
    {"c2", -25909, -7368},
    {"c3", 4346, 6844},
    {"f1,1", -13747, 8399},
    {"f1,10", -820, 34843},
    {"f1,11", -2747, 41803},
    {"f1,12", 0, 47139},
    {"f1,13", 4933, 49315},
    {"f1,14", 10000, 50000},
    {"f1,15", 10000, 60000},
    {"f1,2", -11209, 12820},
    {"f1,3", -9472, 18016},
    {"f1,4", -5443, 21476},
    {"f1,5", 551, 21460},
    {"f1,6", 5982, 23455},
    {"f1,7", 8552, 28290},
    {"f1,8", 9570, 33910},
    {"f1,9", 7579, 39207},
    {"f2,1", -5192, -4332},
    {"f2,10", 34669, 5315},
    {"f2,11", 42677, 2152},
    {"f2,12", 42196, -2889},
    {"f2,13", 44673, -8839},
    {"f2,14", 50000, -10000},
    {"f2,15", 60000, -10000},
    {"f2,2", -1892, -8284},
    {"f2,3", 2508, -11326},
    {"f2,4", 8285, -10517},
    {"f2,5", 12056, -7201},
    {"f2,6", 16864, -4452},
    {"f2,7", 21819, -3538},
    {"f2,8", 27475, -3480},
    {"f2,9", 31822, -550},
    {"f3,1", -15156, -7544},
    {"f3,10", 21817, -31711},
    {"f3,11", 20200, -38074},
    {"f3,12", 15927, -40942},
    {"f3,13", 11544, -44719},
    {"f3,14", 10000, -50000},
    {"f3,15", 10000, -60000},
    {"f3,2", -12511, -12879},
    {"f3,3", -9711, -17260},
    {"f3,4", -5284, -20744},
    {"f3,5", -103, -21416},
    {"f3,6", 5467, -21420},
    {"f3,7", 10563, -22052},
    {"f3,8", 16306, -22731},
    {"f3,9", 19978, -26753},
    {"m", -11806, 1365},
    {"t1,1", -23316, 16765},
    {"t1,10", -22665, 40685},
    {"t1,11", -18305, 36280},
    {"t1,12", -12577, 38063},
    {"t1,13", -13039, 45459},
    {"t1,14", -10000, 50000},
    {"t1,15", -10000, 60000},
    {"t1,2", -27860, 20034},
    {"t1,3", -33437, 20860},
    {"t1,4", -38605, 25674},
    {"t1,5", -38677, 31175},
    {"t1,6", -40269, 35957},
    {"t1,7", -36835, 42226},
    {"t1,8", -32381, 44693},
    {"t1,9", -25530, 45622},
    {"t2,1", 10106, 6208},
    {"t2,10", 46584, 30090},
    {"t2,11", 42036, 23870},
    {"t2,12", 43403, 18971},
    {"t2,13", 47808, 14873},
    {"t2,14", 50000, 10000},
    {"t2,15", 60000, 10000},
    {"t2,2", 14976, 9120},
    {"t2,3", 19721, 11059},
    {"t2,4", 24226, 14762},
    {"t2,5", 25549, 20703},
    {"t2,6", 26491, 25637},
    {"t2,7", 33101, 29232},
    {"t2,8", 35709, 34020},
    {"t2,9", 42556, 35453},
    {"t3,1", -23250, -15063},
    {"t3,10", -21041, -45992},
    {"t3,11", -19134, -37491},
    {"t3,12", -11392, -38182},
    {"t3,13", -10115, -44233},
    {"t3,14", -10000, -50000},
    {"t3,15", -10000, -60000},
    {"t3,2", -26845, -18830},
    {"t3,3", -32861, -19240},
    {"t3,4", -37027, -22595},
    {"t3,5", -37334, -28647},
    {"t3,6", -39578, -33264},
    {"t3,7", -36397, -40390},
    {"t3,8", -30934, -42405},
    {"t3,9", -27155, -45964},
    {"w1", -21259, 911},
    {"w2", -3364, 5914},
};

inline constexpr TilePoint kC2[] = {
    {"c1", -1333, -12095},
    {"c2", -11821, -16169},
    {"c3", -11511, 18357},
    {"f1,1", -2641, -1762},
    {"f1,10", 34158, 18776},
    {"f1,11", 39656, 21896},
    {"f1,12", 46204, 20551},
    {"f1,13", 46764, 13821},
    {"f1,14", 50000, 10000},
    {"f1,15", 60000, 10000},
    {"f1,2", 2347, -1426},
    {"f1,3", 7395, 964},
    {"f1,4", 12048, 2872},
    {"f1,5", 17193, 4453},
    {"f1,6", 22014, 6210},
    {"f1,7", 27197, 7296},
    {"f1,8", 32451, 7013},
    {"f1,9", 36541, 11908},
    {"f2,1", -3836, 8569},
    {"f2,10", 23847, 38431},
    {"f2,11", 19543, 42069},
    {"f2,12", 12676, 39441},
    {"f2,13", 8723, 44864},
    {"f2,14", 10000, 50000},
    {"f2,15", 10000, 60000},
    {"f2,2", 746, 10991},
    {"f2,3", 4142, 15248},
    {"f2,4", 9147, 17383},
    {"f2,5", 14328, 18015},
    {"f2,6", 19201, 20373},
    {"f2,7", 23219, 23567},
    {"f2,8", 26508, 27915},
    {"f2,9", 26814, 34145},
    {"f3,1", -18015, -1748},
    {"f3,10", -26588, -40602},
    {"f3,11", -21548, -43288},
    {"f3,12", -15869, -40969},
    {"f3,13", -11045, -44940},
    {"f3,14", -10000, -50000},
    {"f3,15", -10000, -60000},
    {"f3,2", -20537, -6472},
    {"f3,3", -24283, -10214},
    {"f3,4", -27880, -14251},
    {"f3,5", -32523, -16686},
    {"f3,6", -35488, -21616},
    {"f3,7", -34723, -27060},
    {"f3,8", -31835, -31508},
    {"f3,9", -29395, -36253},
    {"m", -9477, 801},
    {"t1,1", 7995, -11564},
    {"t1,10", 49414, -24189},
    {"t1,11", 45888, -19892},
    {"t1,12", 41026, -15259},
    {"t1,13", 45103, -7656},
    {"t1,14", 50000, -10000},
    {"t1,15", 60000, -10000},
    {"t1,2", 13045, -12889},
    {"t1,3", 18774, -12834},
    {"t1,4", 23379, -15067},
    {"t1,5", 28703, -17617},
    {"t1,6", 32236, -21287},
    {"t1,7", 36087, -25218},
    {"t1,8", 38411, -29835},
    {"t1,9", 46002, -31040},
    {"t2,1", -12008, 27943},
    {"t2,10", -29176, 44113},
    {"t2,11", -23846, 43237},
    {"t2,12", -18637, 43769},
    {"t2,13", -14028, 47023},
    {"t2,14", -10000, 50000},
    {"t2,15", -10000, 60000},
    {"t2,2", -17294, 28875},
    {"t2,3", -21868, 24311},
    {"t2,4", -26955, 24188},
    {"t2,5", -32245, 25412},
    {"t2,6", -36669, 28481},
    {"t2,7", -39560, 32892},
    {"t2,8", -38544, 39505},
    {"t2,9", -34324, 42717},
    {"t3,1", -9286, -20993},
    {"t3,10", 29121, -42437},
    {"t3,11", 24043, -43931},
    {"t3,12", 20723, -49255},
    {"t3,13", 15076, -49428},
    {"t3,14", 10000, -50000},
    {"t3,15", 10000, -60000},
    {"t3,2", -4017, -23158},
    {"t3,3", 1005, -25499},
    {"t3,4", 6676, -27757},
    {"t3,5", 11911, -26342},
    {"t3,6", 16742, -23646},
    {"t3,7", 23122, -26404},
    {"t3,8", 23915, -32368},
    {"t3,9", 29238, -34897},
    {"w1", -10335, -8761},
    {"w2", -14221, 9147},
};

inline constexpr TilePoint kC3[] = {
    {"c1", -1063, 14553},
    {"c2", 5183, 5789},
    {"c3", -7000, -17355},
    {"f1,1", -14834, 7215},
    {"f1,10", -26588, 44779},
    {"f1,11", -21053, 44363},
    {"f1,12", -15394, 39822},
    {"f1,13", -9878, 43150},
    {"f1,14", -10000, 50000},
    {"f1,15", -10000, 60000},
    {"f1,2", -13591, 12059},
    {"f1,3", -11934, 17236},
    {"f1,4", -13376, 22457},
    {"f1,5", -19656, 24857},
    {"f1,6", -25813, 20947},
    {"f1,7", -31829, 26791},
    {"f1,8", -28471, 32152},
    {"f1,9", -30790, 37415},
    {"f2,1", -19416, -2121},
    {"f2,10", -26757, -41470},
    {"f2,11", -21498, -43289},
    {"f2,12", -15396, -40373},
    {"f2,13", -10430, -44674},
    {"f2,14", -10000, -50000},
    {"f2,15", -10000, -60000},
    {"f2,2", -22485, -6614},
    {"f2,3", -27268, -9427},
    {"f2,4", -29908, -13914},
    {"f2,5", -33434, -18039},
    {"f2,6", -36118, -22473},
    {"f2,7", -35653, -28274},
    {"f2,8", -32016, -32038},
    {"f2,9", -30394, -37261},
    {"f3,1", -4418, -3187},
    {"f3,10", 37308, -19068},
    {"f3,11", 41951, -16651},
    {"f3,12", 38158, -8445},
    {"f3,13", 45869, -4499},
    {"f3,14", 50000, -10000},
    {"f3,15", 60000, -10000},
    {"f3,2", -1930, -8008},
    {"f3,3", 4108, -9368},
    {"f3,4", 8796, -7291},
    {"f3,5", 14384, -7645},
    {"f3,6", 18065, -12048},
    {"f3,7", 21758, -16151},
    {"f3,8", 28434, -13314},
    {"f3,9", 31739, -19074},
    {"m", -9945, -553},
    {"t1,1", 2855, 22673},
    {"t1,10", 30392, 44963},
    {"t1,11", 25155, 44167},
    {"t1,12", 19798, 44983},
    {"t1,13", 15018, 47482},
    {"t1,14", 10000, 50000},
    {"t1,15", 10000, 60000},
    {"t1,2", 7523, 25718},
    {"t1,3", 11802, 28910},
    {"t1,4", 16688, 33256},
    {"t1,5", 22443, 32436},
    {"t1,6", 27473, 31773},
    {"t1,7", 32991, 34876},
    {"t1,8", 39289, 37714},
    {"t1,9", 36780, 45307},
    {"t2,1", -1297, -24876},
    {"t2,10", 29293, -43300},
    {"t2,11", 24201, -44178},
    {"t2,12", 18476, -43872},
    {"t2,13", 13620, -46458},
    {"t2,14", 10000, -50000},
    {"t2,15", 10000, -60000},
    {"t2,2", 4854, -25142},
    {"t2,3", 10185, -24096},
    {"t2,4", 15457, -24425},
    {"t2,5", 20463, -27196},
    {"t2,6", 25336, -28332},
    {"t2,7", 30610, -29870},
    {"t2,8", 34844, -34448},
    {"t2,9", 33759, -40059},
    {"t3,1", 13595, 2727},
    {"t3,10", 47643, 29218},
    {"t3,11", 48956, 20441},
    {"t3,12", 40857, 15323},
    {"t3,13", 43833, 7754},
    {"t3,14", 50000, 10000},
    {"t3,15", 60000, 10000},
    {"t3,2", 16406, 7903},
    {"t3,3", 11806, 14440},
    {"t3,4", 14926, 18391},
    {"t3,5", 20502, 20993},
    {"t3,6", 26814, 13977},
    {"t3,7", 30687, 18841},
    {"t3,8", 35672, 24382},
    {"t3,9", 40782, 26882},
    {"w1", -4302, 7212},
    {"w2", -12431, -9826},
};

inline constexpr TilePoint kD1[] = {
    {"c1", -11956, 14220},
    {"c3", 11956, -14220},
    {"f1,1", 3719, 6814},
    {"f1,10", 26308, 40039},
    {"f1,11", 21865, 43102},
    {"f1,12", 15962, 41434},
    {"f1,13", 11051, 45011},
    {"f1,14", 10000, 50000},
    {"f1,15", 10000, 60000},
    {"f1,2", 7970, 9740},
    {"f1,3", 12513, 12369},
    {"f1,4", 16770, 15293},
    {"f1,5", 21589, 17455},
    {"f1,6", 26196, 19962},
    {"f1,7", 28541, 25191},
    {"f1,8", 29701, 30055},
    {"f1,9", 29155, 35635},
    {"f2,1", -4316, -6716},
    {"f2,10", -26177, -40348},
    {"f2,11", -21637, -43398},
    {"f2,12", -15752, -41277},
    {"f2,13", -10816, -44910},
    {"f2,14", -10000, -50000},
    {"f2,15", -10000, -60000},
    {"f2,2", -8483, -9623},
    {"f2,3", -12905, -12595},
    {"f2,4", -17298, -15795},
    {"f2,5", -22086, -17497},
    {"f2,6", -26790, -20203},
    {"f2,7", -28709, -25527},
    {"f2,8", -29906, -30432},
    {"f2,9", -29164, -36122},
    {"m", -189, -135},
    {"t1,1", -8338, 23110},
    {"t1,10", -22272, 46970},
    {"t1,11", -19037, 38674},
    {"t1,12", -12647, 39010},
    {"t1,13", -10159, 44802},
    {"t1,14", -10000, 50000},
    {"t1,15", -10000, 60000},
    {"t1,2", -13895, 24473},
    {"t1,3", -18876, 23136},
    {"t1,4", -24566, 23294},
    {"t1,5", -28037, 29167},
    {"t1,6", -33503, 30294},
    {"t1,7", -36665, 36406},
    {"t1,8", -32790, 42405},
    {"t1,9", -27815, 45216},
    {"t2,1", 8338, -23110},
    {"t2,10", 22272, -46970},
    {"t2,11", 19037, -38674},
    {"t2,12", 12647, -39010},
    {"t2,13", 10159, -44802},
    {"t2,14", 10000, -50000},
    {"t2,15", 10000, -60000},
    {"t2,2", 13895, -24473},
    {"t2,3", 18876, -23136},
    {"t2,4", 24566, -23294},
    {"t2,5", 28037, -29167},
    {"t2,6", 33503, -30294},
    {"t2,7", 36665, -36406},
    {"t2,8", 32790, -42405},
    {"t2,9", 27815, -45216},
    {"w1", -6681, 6925},
    {"w2", 6086, -7002},
};

inline constexpr TilePoint kD2[] = {
    {"c1", -15492, 14553},
    {"c3", -2182, -13189},
    {"f1,1", -8030, 6420},
    {"f1,10", 19290, 36882},
    {"f1,11", 15409, 41060},
    {"f1,12", 7136, 39106},
    {"f1,13", 4576, 47562},
    {"f1,14", 10000, 50000},
    {"f1,15", 10000, 60000},
    {"f1,2", -3838, 9279},
    {"f1,3", -2531, 15249},
    {"f1,4", -1127, 20134},
    {"f1,5", 2234, 24493},
    {"f1,6", 9029, 17725},
    {"f1,7", 13665, 20710},
    {"f1,8", 13138, 27662},
    {"f1,9", 17125, 30757},
    {"f2,1", -3202, -2794},
    {"f2,10", 34740, 20928},
    {"f2,11", 39698, 19802},
    {"f2,12", 45465, 19610},
    {"f2,13", 49124, 15194},
    {"f2,14", 50000, 10000},
    {"f2,15", 60000, 10000},
    {"f2,2", 984, 1},
    {"f2,3", 5997, 2117},
    {"f2,4", 11234, 2182},
    {"f2,5", 15990, 5253},
    {"f2,6", 21278, 4880},
    {"f2,7", 26420, 7653},
    {"f2,8", 28346, 12717},
    {"f2,9", 29025, 17764},
    {"m", -11562, -1273},
    {"t1,1", -11378, 23157},
    {"t1,10", -22884, 44452},
    {"t1,11", -18280, 42051},
    {"t1,12", -11615, 38586},
    {"t1,13", -6404, 45097},
    {"t1,14", -10000, 50000},
    {"t1,15", -10000, 60000},
    {"t1,2", -15531, 26735},
    {"t1,3", -21738, 24656},
    {"t1,4", -27014, 22932},
    {"t1,5", -31209, 29075},
    {"t1,6", -32783, 33857},
    {"t1,7", -38071, 38616},
    {"t1,8", -35130, 46437},
    {"t1,9", -27938, 47540},
    {"t2,1", 4716, -12315},
    {"t2,10", 38340, -6525},
    {"t2,11", 38756, -148},
    {"t2,12", 46494, 35},
    {"t2,13", 48817, -4539},
    {"t2,14", 50000, -10000},
    {"t2,15", 60000, -10000},
    {"t2,2", 9723, -12375},
    {"t2,3", 15840, -14147},
    {"t2,4", 16875, -21330},
    {"t2,5", 24706, -23121},
    {"t2,6", 26286, -16705},
    {"t2,7", 29487, -12245},
    {"t2,8", 37581, -17325},
    {"t2,9", 39899, -12476},
    {"w1", -18383, 5429},
    {"w2", -10000, -10731},
};

inline constexpr TilePoint kD3[] = {
    {"c1", -15883, 15333},
    {"c3", 3357, 2079},
    {"f1,1", -7002, 4564},
    {"f1,10", 17927, 37697},
    {"f1,11", 9958, 39212},
    {"f1,12", 3102, 40008},
    {"f1,13", 3143, 49265},
    {"f1,14", 10000, 50000},
    {"f1,15", 10000, 60000},
    {"f1,2", -4624, 8965},
    {"f1,3", -5392, 14913},
    {"f1,4", -2401, 19131},
    {"f1,5", 554, 24027},
    {"f1,6", 8054, 18304},
    {"f1,7", 12629, 20329},
    {"f1,8", 11033, 28344},
    {"f1,9", 16121, 30439},
    {"f2,1", -10676, -7949},
    {"f2,10", 32816, -10967},
    {"f2,11", 35938, -6961},
    {"f2,12", 41055, -4170},
    {"f2,13", 46394, -6154},
    {"f2,14", 50000, -10000},
    {"f2,15", 60000, -10000},
    {"f2,2", -7234, -12422},
    {"f2,3", -2391, -14521},
    {"f2,4", 2691, -15990},
    {"f2,5", 7889, -16587},
    {"f2,6", 13034, -17588},
    {"f2,7", 18440, -16066},
    {"f2,8", 23499, -15997},
    {"f2,9", 28904, -14876},
    {"m", -9858, -152},
    {"t1,1", -11648, 23899},
    {"t1,10", -23152, 44462},
    {"t1,11", -18862, 41531},
    {"t1,12", -10962, 37490},
    {"t1,13", -6238, 44761},
    {"t1,14", -10000, 50000},
    {"t1,15", -10000, 60000},
    {"t1,2", -15989, 26908},
    {"t1,3", -22154, 24276},
    {"t1,4", -27097, 22322},
    {"t1,5", -31578, 28953},
    {"t1,6", -33238, 33816},
    {"t1,7", -38942, 38606},
    {"t1,8", -35696, 47087},
    {"t1,9", -28590, 48036},
    {"t2,1", 10025, -1802},
    {"t2,10", 40076, 25981},
    {"t2,11", 47275, 25847},
    {"t2,12", 49303, 20730},
    {"t2,13", 48789, 15449},
    {"t2,14", 50000, 10000},
    {"t2,15", 60000, 10000},
    {"t2,2", 14485, 1024},
    {"t2,3", 17426, 5908},
    {"t2,4", 19590, 11228},
    {"t2,5", 24622, 13419},
    {"t2,6", 32810, 14411},
    {"t2,7", 30155, 22352},
    {"t2,8", 30117, 29000},
    {"t2,9", 37815, 32093},
    {"w1", -17335, 5861},
    {"w2", -1050, -3971},
};

inline constexpr TilePoint kD4[] = {
    {"c1", 11957, 14216},
    {"c3", 11957, -14216},
    {"f1,1", -4372, 6314},
    {"f1,10", -26178, 40231},
    {"f1,11", -21715, 43284},
    {"f1,12", -15824, 41377},
    {"f1,13", -10903, 44971},
    {"f1,14", -10000, 50000},
    {"f1,15", -10000, 60000},
    {"f1,2", -8563, 9345},
    {"f1,3", -12743, 12484},
    {"f1,4", -17050, 15674},
    {"f1,5", -21912, 17505},
    {"f1,6", -26571, 20126},
    {"f1,7", -28657, 25437},
    {"f1,8", -29812, 30309},
    {"f1,9", -29143, 35956},
    {"f2,1", -4326, -6729},
    {"f2,10", -26127, -40336},
    {"f2,11", -21623, -43389},
    {"f2,12", -15763, -41325},
    {"f2,13", -10826, -44940},
    {"f2,14", -10000, -50000},
    {"f2,15", -10000, -60000},
    {"f2,2", -8498, -9633},
    {"f2,3", -12911, -12599},
    {"f2,4", -17297, -15793},
    {"f2,5", -22082, -17509},
    {"f2,6", -26781, -20214},
    {"f2,7", -28695, -25555},
    {"f2,8", -29878, -30414},
    {"f2,9", -29149, -36111},
    {"m", -139, -192},
    {"t1,1", 8354, 23114},
    {"t1,10", 22282, 46965},
    {"t1,11", 19002, 38725},
    {"t1,12", 12635, 39039},
    {"t1,13", 10184, 44844},
    {"t1,14", 10000, 50000},
    {"t1,15", 10000, 60000},
    {"t1,2", 13901, 24474},
    {"t1,3", 18888, 23154},
    {"t1,4", 24573, 23308},
    {"t1,5", 28030, 29164},
    {"t1,6", 33475, 30305},
    {"t1,7", 36646, 36407},
    {"t1,8", 32769, 42387},
    {"t1,9", 27821, 45190},
    {"t2,1", 8354, -23114},
    {"t2,10", 22282, -46965},
    {"t2,11", 19002, -38725},
    {"t2,12", 12635, -39039},
    {"t2,13", 10184, -44844},
    {"t2,14", 10000, -50000},
    {"t2,15", 10000, -60000},
    {"t2,2", 13901, -24474},
    {"t2,3", 18888, -23154},
    {"t2,4", 24573, -23308},
    {"t2,5", 28030, -29164},
    {"t2,6", 33475, -30305},
    {"t2,7", 36646, -36407},
    {"t2,8", 32769, -42387},
    {"t2,9", 27821, -45190},
    {"w1", 6011, 7001},
    {"w2", 6076, -7002},
};

inline constexpr TilePoint kD5[] = {
    {"c1", -3653, 10194},
    {"c3", 6540, -3977},
    {"f1,1", -13525, -1966},
    {"f1,10", -28176, 38147},
    {"f1,11", -20633, 40090},
    {"f1,12", -20409, 46105},
    {"f1,13", -14960, 49368},
    {"f1,14", -10000, 50000},
    {"f1,15", -10000, 60000},
    {"f1,2", -16321, 3441},
    {"f1,3", -21558, 4815},
    {"f1,4", -26138, 8284},
    {"f1,5", -26133, 14650},
    {"f1,6", -30202, 18022},
    {"f1,7", -32579, 22879},
    {"f1,8", -24625, 27162},
    {"f1,9", -27527, 32209},
    {"f2,1", -10780, -13253},
    {"f2,10", 35153, -16991},
    {"f2,11", 37069, -12250},
    {"f2,12", 39004, -6330},
    {"f2,13", 46660, -5520},
    {"f2,14", 50000, -10000},
    {"f2,15", 60000, -10000},
    {"f2,2", -6518, -16383},
    {"f2,3", -1181, -17790},
    {"f2,4", 3747, -18788},
    {"f2,5", 9170, -19250},
    {"f2,6", 14156, -20501},
    {"f2,7", 20500, -18971},
    {"f2,8", 25407, -21535},
    {"f2,9", 30741, -21350},
    {"m", -8162, -4242},
    {"t1,1", 2118, 13859},
    {"t1,10", 31613, 44528},
    {"t1,11", 24040, 48935},
    {"t1,12", 19833, 45002},
    {"t1,13", 13102, 44121},
    {"t1,14", 10000, 50000},
    {"t1,15", 10000, 60000},
    {"t1,2", 3273, 20130},
    {"t1,3", 199, 25533},
    {"t1,4", 869, 33928},
    {"t1,5", 7764, 34788},
    {"t1,6", 10679, 28431},
    {"t1,7", 18436, 28868},
    {"t1,8", 23339, 34578},
    {"t1,9", 28266, 36119},
    {"t2,1", 11729, -5156},
    {"t2,10", 46933, 30065},
    {"t2,11", 49015, 21349},
    {"t2,12", 41860, 17148},
    {"t2,13", 41983, 9979},
    {"t2,14", 50000, 10000},
    {"t2,15", 60000, 10000},
    {"t2,2", 17677, -280},
    {"t2,3", 21015, 3604},
    {"t2,4", 26338, 5738},
    {"t2,5", 30065, 9768},
    {"t2,6", 31046, 16132},
    {"t2,7", 32217, 23427},
    {"t2,8", 35619, 27519},
    {"t2,9", 38770, 33597},
    {"w1", -4395, 3843},
    {"w2", 773, -5234},
};

inline constexpr TilePoint kE[] = {
    {"f1", -60000, -10000},
    {"f10", -26000, -35626},
    {"f11", -26000, -28025},
    {"f12", -26000, -20424},
    {"f13", -20823, -18000},
    {"f14", -13222, -18000},
    {"f15", -10000, -22379},
    {"f16", -10000, -29980},
    {"f17", -10000, -37581},
    {"f18", -7818, -43000},
    {"f19", -217, -43000},
    {"f2", -50000, -10000},
    {"f20", 6000, -41616},
    {"f21", 6000, -34015},
    {"f22", 6000, -26414},
    {"f23", 6000, -18813},
    {"f24", 12788, -18000},
    {"f25", 20389, -18000},
    {"f26", 22000, -23990},
    {"f27", 22000, -31591},
    {"f28", 22000, -39192},
    {"f29", 25793, -43000},
    {"f3", -43554, -14029},
    {"f30", 33394, -43000},
    {"f31", 38000, -40005},
    {"f32", 38000, -32404},
    {"f33", 38000, -24803},
    {"f34", 38000, -17202},
    {"f35", 42984, -12923},
    {"f36", 50000, -10000},
    {"f37", 60000, -10000},
    {"f4", -42000, -20768},
    {"f5", -42000, -28369},
    {"f6", -42000, -35970},
    {"f7", -41429, -43000},
    {"f8", -33828, -43000},
    {"f9", -26227, -43000},
    {"t1", -60000, 10000},
    {"t10", -26000, 35626},
    {"t11", -26000, 28025},
    {"t12", -26000, 20424},
    {"t13", -20823, 18000},
    {"t14", -13222, 18000},
    {"t15", -10000, 22379},
    {"t16", -10000, 29980},
    {"t17", -10000, 37581},
    {"t18", -7818, 43000},
    {"t19", -217, 43000},
    {"t2", -50000, 10000},
    {"t20", 6000, 41616},
    {"t21", 6000, 34015},
    {"t22", 6000, 26414},
    {"t23", 6000, 18813},
    {"t24", 12788, 18000},
    {"t25", 20389, 18000},
    {"t26", 22000, 23990},
    {"t27", 22000, 31591},
    {"t28", 22000, 39192},
    {"t29", 25793, 43000},
    {"t3", -43554, 14029},
    {"t30", 33394, 43000},
    {"t31", 38000, 40005},
    {"t32", 38000, 32404},
    {"t33", 38000, 24803},
    {"t34", 38000, 17202},
    {"t35", 42984, 12923},
    {"t36", 50000, 10000},
    {"t37", 60000, 10000},
    {"t4", -42000, 20768},
    {"t5", -42000, 28369},
    {"t6", -42000, 35970},
    {"t7", -41429, 43000},
    {"t8", -33828, 43000},
    {"t9", -26227, 43000},
};

inline constexpr TilePoint kL[] = {
    {"f1", -180000, 10000},
    {"f10", -92068, 10000},
    {"f11", -82318, 10000},
    {"f12", -72568, 10000},
    {"f13", -62836, 9985},
    {"f14", -53122, 9706},
    {"f15", -43550, 7852},
    {"f16", -34385, 4559},
    {"f17", -25274, 1088},
    {"f18", -16271, -2632},
    {"f19", -8442, -8442},
    {"f2", -170000, 10000},
    {"f20", -2632, -16271},
    {"f21", 1088, -25274},
    {"f22", 4559, -34385},
    {"f23", 7852, -43550},
    {"f24", 9706, -53122},
    {"f25", 9985, -62836},
    {"f26", 10000, -72568},
    {"f27", 10000, -82318},
    {"f28", 10000, -92068},
    {"f29", 10000, -101807},
    {"f3", -160250, 10000},
    {"f30", 10000, -111557},
    {"f31", 10000, -121307},
    {"f32", 10000, -131012},
    {"f33", 10000, -140762},
    {"f34", 10000, -150501},
    {"f35", 10000, -160250},
    {"f36", 10000, -170000},
    {"f37", 10000, -180000},
    {"f4", -150501, 10000},
    {"f5", -140762, 10000},
    {"f6", -131012, 10000},
    {"f7", -121307, 10000},
    {"f8", -111557, 10000},
    {"f9", -101807, 10000},
    {"t1", -180000, -10000},
    {"t10", -100219, -10000},
    {"t11", -91497, -10000},
    {"t12", -82774, -10000},
    {"t13", -74051, -10000},
    {"t14", -65329, -10000},
    {"t15", -56606, -10000},
    {"t16", -48503, -11497},
    {"t17", -42336, -17664},
    {"t18", -36168, -23832},
    {"t19", -30000, -30000},
    {"t2", -170000, -10000},
    {"t20", -23832, -36168},
    {"t21", -17664, -42336},
    {"t22", -11497, -48503},
    {"t23", -10000, -56606},
    {"t24", -10000, -65329},
    {"t25", -10000, -74051},
    {"t26", -10000, -82774},
    {"t27", -10000, -91497},
    {"t28", -10000, -100219},
    {"t29", -10000, -108942},
    {"t3", -161277, -10000},
    {"t30", -10000, -117664},
    {"t31", -10000, -126387},
    {"t32", -10000, -135110},
    {"t33", -10000, -143832},
    {"t34", -10000, -152555},
    {"t35", -10000, -161277},
    {"t36", -10000, -170000},
    {"t37", -10000, -180000},
    {"t4", -152555, -10000},
    {"t5", -143832, -10000},
    {"t6", -135110, -10000},
    {"t7", -126387, -10000},
    {"t8", -117664, -10000},
    {"t9", -108942, -10000},
};

inline constexpr TilePoint kP1[] = {
    {"f1", -180000, -10000},
    {"f10", -90000, -10000},
    {"f11", -80000, -10000},
    {"f12", -70000, -10000},
    {"f13", -60000, -10000},
    {"f14", -50000, -10000},
    {"f15", -40000, -10000},
    {"f16", -30000, -10000},
    {"f17", -20000, -10000},
    {"f18", -10000, -10000},
    {"f19", 0, -10000},
    {"f2", -170000, -10000},
    {"f20", 10000, -10000},
    {"f21", 20000, -10000},
    {"f22", 30000, -10000},
    {"f23", 40000, -10000},
    {"f24", 50000, -10000},
    {"f25", 60000, -10000},
    {"f26", 70000, -10000},
    {"f27", 80000, -10000},
    {"f28", 90000, -10000},
    {"f29", 100000, -10000},
    {"f3", -160000, -10000},
    {"f30", 110000, -10000},
    {"f31", 120000, -10000},
    {"f32", 130000, -10000},
    {"f33", 140000, -10000},
    {"f34", 150000, -10000},
    {"f35", 160000, -10000},
    {"f36", 170000, -10000},
    {"f37", 180000, -10000},
    {"f4", -150000, -10000},
    {"f5", -140000, -10000},
    {"f6", -130000, -10000},
    {"f7", -120000, -10000},
    {"f8", -110000, -10000},
    {"f9", -100000, -10000},
    {"t1", -180000, 10000},
    {"t10", -90000, 10000},
    {"t11", -80000, 10000},
    {"t12", -70000, 10000},
    {"t13", -60000, 10000},
    {"t14", -50000, 10000},
    {"t15", -40000, 10000},
    {"t16", -30000, 10000},
    {"t17", -20000, 10000},
    {"t18", -10000, 10000},
    {"t19", 0, 10000},
    {"t2", -170000, 10000},
    {"t20", 10000, 10000},
    {"t21", 20000, 10000},
    {"t22", 30000, 10000},
    {"t23", 40000, 10000},
    {"t24", 50000, 10000},
    {"t25", 60000, 10000},
    {"t26", 70000, 10000},
    {"t27", 80000, 10000},
    {"t28", 90000, 10000},
    {"t29", 100000, 10000},
    {"t3", -160000, 10000},
    {"t30", 110000, 10000},
    {"t31", 120000, 10000},
    {"t32", 130000, 10000},
    {"t33", 140000, 10000},
    {"t34", 150000, 10000},
    {"t35", 160000, 10000},
    {"t36", 170000, 10000},
    {"t37", 180000, 10000},
    {"t4", -150000, 10000},
    {"t5", -140000, 10000},
    {"t6", -130000, 10000},
    {"t7", -120000, 10000},
    {"t8", -110000, 10000},
    {"t9", -100000, 10000},
};

struct TileDesign {
    const char* id;
    std::span<const TilePoint> points;
};

inline constexpr TileDesign kTileDesigns[] = {
    {"B1", kB1},
    {"B2", kB2},
    {"B3", kB3},
    {"V11", kV11},
    {"V12", kV12},
    {"C1", kC1},
    {"C2", kC2},
    {"C3", kC3},
    {"D1", kD1},
    {"D2", kD2},
    {"D3", kD3},
    {"D4", kD4},
    {"D5", kD5},
    {"E", kE},
    {"L", kL},
    {"P1", kP1},
};

}  // namespace gudg::detail
