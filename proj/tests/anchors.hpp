#pragma once
/** @file
 *  @brief Frozen high-precision reference values, produced by an independent
 *         multiprecision implementation (55 significant digits).
 */

namespace anchors {

// normalized complete elliptic integrals
inline constexpr const char* kKt_half = "1.073182007149364375052841707970349795669526818631368626";
inline constexpr const char* kEt_half = "0.9342154576676941161410020311701089940580405309978673730";
inline constexpr const char* kPit_mhalf_half =
    "0.8699243369080155208597541873185082311680967426490176462";
inline constexpr const char* kPit_m9_25_12_25 =
    "0.9099600325430260573631665248104804615002464932057659717";
inline constexpr const char* kPit_m16_25_12_25 =
    "0.8261483224740653207193481665060269429523654354049024958";
inline constexpr const char* kKt_310 = "1.023715546376166386830629273587902824075495367801258644";

// Carlson third-kind integrals, including Cauchy principal values
inline constexpr const char* kRJ_1_2_3_mhalf =
    "0.2072200111587185900616152555240027452459459369844458333";
inline constexpr const char* kRJ_2_54_3_m3 =
    "-0.226447378682102457368734984000653993279898363120480971";
inline constexpr const char* kRJ_0_34_1_32 =
    "1.915658410847994890150967590117728084305233283048161311";

// Toeplitz-determinant correlations at (s_h, s_v) = (3/5, 4/5), N = 1..5
inline constexpr const char* kRow35_45[5] = {
    "0.3650352171414201541746897911838454732265462888000042745",
    "0.1578448923679178787854412734794341045506872382865414646",
    "0.07517088041130627190564382939811744466676555724368424541",
    "0.03774795531480725285159591093441760653232055369525882916",
    "0.01954808680595844276942323900886437194449153383365844432",
};
inline constexpr const char* kDiag35_45[5] = {
    "0.2475928627795359872672462968337137845585117459469505508",
    "0.09011759652289351013494453448042715633080793010735820277",
    "0.03625021772895754238437527710174580427061636011978679967",
    "0.01527732813085146036472798776463264899345126827778073912",
    "0.006615066454202995739362248717132279476579442749422981029",
};
inline constexpr const char* kDualRow35_45[5] = {
    "0.9443370890683517818516970617270088105543093692584077293",
    "0.9378195675847234467333811381201664063866239123493517045",
    "0.9368488810679912533897125299255290429183620278890727022",
    "0.9366734662758681421112830622542291068473929681700549898",
    "0.9366370918223197170148335377653153807791477687190443263",
};
inline constexpr const char* kDualDiag35_45[5] = {
    "0.9396375003419626634613041495003451121128642875305945581",
    "0.9369317691948654424123231228524868975682754906696551165",
    "0.9366660567303153577125726079335950952311169225294528708",
    "0.9366320668627107151441426253852798819162195916417556806",
    "0.9366270797611524953207681648258269880562815916103968194",
};
inline constexpr const char* kRowSwap35_45[2] = {
    "0.4203596980227724443074330914966923029372183215822450598",
    "0.1989068907282264033892709588406936294772463270397610569",
};
inline constexpr const char* kDualRowSwap35_45[2] = {
    "0.9471692486842080016700167007988093313683518936971918262",
    "0.9386736036610819703027656704778339093610389280466783199",
};

// correlations at (s_h, s_v) = (7/20, 6/5), N = 1..3
inline constexpr const char* kRow720_65[3] = {
    "0.2715565998133093123382405251181726634007421594766392685",
    "0.09455107431020930960333082264854393198752299960130540647",
    "0.03678196006384073204717443908260576679963012004260872427",
};
inline constexpr const char* kDiag720_65[3] = {
    "0.2149684053342982685434343657471753901642347720225718814",
    "0.06826788940454377853780184628408950434653138737614284303",
    "0.02399277609108865733963639036412495389385549574718164085",
};

// low-temperature correlations at (s_h, s_v) = (5/4, 8/5), N = 1..3
inline constexpr const char* kLowRow54_85[3] = {
    "0.9397136493039240559062354157302616434008511355402598732",
    "0.9321253539291896418677113012871809330219914628247368578",
    "0.9309106461630596058775932326540437277015187584994647912",
};
inline constexpr const char* kLowDiag54_85[3] = {
    "0.9342154576676941161410020311701089940580405309978673730",
    "0.9310046217178996438551572168335756665328487498993686032",
    "0.9306617358583960200637629046393333323838145050141318080",
};

// diagonal symbol entries a_n at parameter 7/20 (direct branch), n = -2..4
inline constexpr const char* kSymbolLow720[7] = {
    "-0.01581046668089513099103172713195742871055812956246932275",
    "-0.1778112823174037207071399156598700711000774991325270917",
    "0.9686330703424787253534186223748138344401970349270325555",
    "0.1667439556407771290134177066674998710026868084387985657",
    "0.04352621424323856992555061244050847813864068045036973385",
    "0.01265937592608924209526267669589093038107856043745395746",
    "0.003870339377281083319117432243310748354700686052470345662",
};
// diagonal symbol entries a_n at parameter 20/7 (winding branch), n = -2..4
inline constexpr const char* kSymbolHigh720[7] = {
    "-0.1667439556407771290134177066674998710026868084387985657",
    "-0.9686330703424787253534186223748138344401970349270325555",
    "0.1778112823174037207071399156598700711000774991325270917",
    "0.01581046668089513099103172713195742871055812956246932275",
    "0.002789418428176302176817549253831291423595505883598738863",
    "0.0006131981975201279946786045586978698747137947526379699315",
    "0.0001507314304856473727259998812765502743913847199983728065",
};

// nearest-neighbor low-temperature correlation at nu = 3/4, modulus 3/10
inline constexpr const char* kClow01_nu34_x310 =
    "0.9782723520936392319702294246651749709522010244616968294";

// lambda^8 coefficient of the third-kind series at s = 7/10
inline constexpr const char* kPiSeriesC8_s710 =
    "0.01781256533255455042179881116442740549365953597072853984";

}  // namespace anchors
