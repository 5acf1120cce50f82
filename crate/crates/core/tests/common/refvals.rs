// GENERATED by scripts/reference_values.py -- do not edit by hand.
// All values computed with mpmath at 60 significant digits.
#![allow(dead_code, clippy::excessive_precision)]

pub const DD_EXP_HALF: (f64, f64) = (1.6487212707001282, -4.731568479435833e-17);
pub const DD_EXP_NEG_12_3: (f64, f64) = (4.551744463083231e-06, 3.675954027968001e-22);
pub const DD_LN_3: (f64, f64) = (1.0986122886681098, -9.07129723500153e-17);
pub const DD_LN_1E300: (f64, f64) = (690.7755278982137, 2.369515526854504e-14);
pub const DD_SIN_1_7: (f64, f64) = (0.9916648104524686, 5.077812604198573e-17);
pub const DD_COS_25_1: (f64, f64) = (0.9994640538508954, 3.393277173136127e-17);
pub const DD_SQRT_2: (f64, f64) = (1.4142135623730951, -9.667293313452913e-17);
pub const DD_ATAN2_3_NEG2: (f64, f64) = (2.158798930342464, 2.1958367134601997e-16);

pub const GAMMA_05_03I: ((f64, f64), (f64, f64)) = ((1.2609927863965769, 7.412540414553742e-17), (-0.7317595056918336, -2.8287533541177696e-17));
pub const GAMMA_5_NEG2I: ((f64, f64), (f64, f64)) = ((-15.586497870240713, -5.134724348124728e-16), (-1.0575920372152245, -6.5509021013664825e-18));
pub const GAMMA_NEG23_17I: ((f64, f64), (f64, f64)) = ((0.014368574832446983, -4.77579326037168e-19), (-0.011193978994831532, -7.885468555500082e-19));
pub const GAMMA_161_03I: ((f64, f64), (f64, f64)) = ((1165107315567.1172, -4.3438412158309706e-05), (1259352039892.2556, -4.6075394245804014e-05));
pub const RGAMMA_NEG35_001I: ((f64, f64), (f64, f64)) = ((3.7039180671959135, -2.0876117142606624e-16), (-0.051445987131636485, 2.2936326081839283e-18));
pub const GAMMA_0_0001: (f64, f64) = (9999.422883231624, -2.1612498989046737e-13);

pub const J_1_1: ((f64, f64), (f64, f64)) = ((0.4400505857449335, 1.8081531429378303e-17), (0.0, 0.0));
pub const J_2I_10: ((f64, f64), (f64, f64)) = ((-2.642192203368753, -1.1799266659573383e-16), (1.1785490528974076, 3.6155675443750086e-17));
pub const J_03_02I_2_1I: ((f64, f64), (f64, f64)) = ((0.43920152121508066, -1.6274205400750697e-17), (-0.3823229193534521, -3.951344009578044e-18));
pub const J_NEG07_6: ((f64, f64), (f64, f64)) = ((0.32584004983129766, 1.607576306460223e-17), (0.0, 0.0));
pub const J_05I_M18_9I: ((f64, f64), (f64, f64)) = ((51.42223265773116, -1.3667466079513158e-15), (326.28733328690697, -1.2569511048036929e-14));
pub const J_NEG2_35: ((f64, f64), (f64, f64)) = ((0.4586291841943075, 1.432478694798063e-18), (0.0, 0.0));

pub const Y_0_1: ((f64, f64), (f64, f64)) = ((0.08825696421567696, 2.273393719067021e-18), (0.0, 0.0));
pub const Y_025_2: ((f64, f64), (f64, f64)) = ((0.39273839961538504, 1.8803578125723695e-17), (0.0, 0.0));
pub const Y_03I_45: ((f64, f64), (f64, f64)) = ((-0.21301297074483935, -1.3162725498803821e-17), (0.15746450157665484, -5.8753852418806116e-18));
pub const I_07_32: ((f64, f64), (f64, f64)) = ((5.213380931845907, 2.516182062001842e-16), (0.0, 0.0));
pub const I_04_02I_15_05I: ((f64, f64), (f64, f64)) = ((1.3592137586007176, -1.0744285778749427e-16), (0.3887837915277749, -1.3894639834615347e-17));
pub const K_04_2: ((f64, f64), (f64, f64)) = ((0.11772913317042333, -1.8024456788771337e-18), (0.0, 0.0));
pub const K_06I_35: ((f64, f64), (f64, f64)) = ((0.01872248610943137, -1.3047818530836406e-18), (0.0, 0.0));
pub const K_04_30: ((f64, f64), (f64, f64)) = ((2.1380798462498185e-14, -6.752610306835009e-31), (0.0, 0.0));
pub const H1_0_05: ((f64, f64), (f64, f64)) = ((0.9384698072408129, 4.5377773145414966e-17), (-0.44451873350670656, 7.66913592441246e-18));
pub const H1_03_01I_30CIS_PI6: ((f64, f64), (f64, f64)) = ((4.0700825221065106e-08, -8.684438493800986e-25), (-3.2399423209292104e-08, 1.2307089456216976e-24));
pub const H2_12_17: ((f64, f64), (f64, f64)) = ((0.5276909548315287, -4.288661249236562e-17), (0.40533045670902496, 1.3482339228002061e-17));

pub const SPH_01_2_1I: ((f64, f64), (f64, f64)) = ((0.28335856225390976, -2.2019843591709977e-17), (0.0, 0.0));
pub const SPH_02I_3: ((f64, f64), (f64, f64)) = ((0.5145440026898943, -1.07441566971584e-17), (0.0, 0.0));
pub const SPH_03_005_CIS23: ((f64, f64), (f64, f64)) = ((2.662313317592715, -1.6795552742137304e-16), (0.0, 0.0));
pub const SPH_NEG02_2_1I: ((f64, f64), (f64, f64)) = ((0.28715575009824296, 1.761740647617415e-18), (0.0, 0.0));
pub const SPH_015_NEG4: ((f64, f64), (f64, f64)) = ((0.5000634894936079, 1.1934454641844536e-17), (0.0, 0.0));
pub const SPH_QUARTER_2_1I: ((f64, f64), (f64, f64)) = ((0.2899972515499909, 2.251519140318532e-17), (0.0, 0.0));
pub const SPH_QUARTER_9: ((f64, f64), (f64, f64)) = ((0.3333333333333333, 1.850371707708594e-17), (0.0, 0.0));
pub const SPH_3Q_2_1I: ((f64, f64), (f64, f64)) = ((0.35159598067104075, -1.8130107288913635e-17), (0.0, 0.0));
pub const SPH_3Q_025: ((f64, f64), (f64, f64)) = ((1.9493394081788311, 1.9831449397197207e-18), (0.0, 0.0));

pub const UPPER_GAMMA_HALF_1: (f64, f64) = (0.27880558528066196, 1.594261853480986e-17);
pub const E1_1: (f64, f64) = (0.21938393439552029, -1.2176656266205919e-17);
pub const INT_X32_SINGULAR: (f64, f64) = (1.1981402347355923, -7.250663635457894e-17);
pub const EMOT_FIRST_INT_05_3_1: (f64, f64) = (0.41826211588586254, -2.505411683165315e-17);

pub const COS_TAIL_HALF_1_0: (f64, f64) = (0.8995900777894126, -3.0737007671901325e-17);
