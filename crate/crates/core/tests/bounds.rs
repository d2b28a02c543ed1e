#![allow(clippy::excessive_precision)]

use hecke_core::scan::{bound_value, BoundKind};

// (p, eps = 0.1, eps = 0, GRH with c = 1), computed at 60 digits.
const REFERENCE: &[(u64, f64, f64, f64)] = &[
    (17, 1.1518105819686984326, 1.1564937821185691216, 1.648586957576319601),
    (
        250499,
        1.7668890920262847045,
        1.9379964054048362437,
        4.9928338844611258639,
    ),
    (1000003, 1.8106832053275802395, 1.9941990620211101, 5.680553756473961425),
    (
        27381391,
        1.9006018668449546546,
        2.1097527764291939506,
        7.6509508697531507733,
    ),
    (
        50017789,
        1.9151963884803529776,
        2.1285271772303687758,
        8.0667131754283485554,
    ),
    (
        57310499,
        1.9184292288559223843,
        2.1326866046173537694,
        8.1633374407508804899,
    ),
    (
        97721849,
        1.930887585041220798,
        2.1487180914725281089,
        8.552129469830842513,
    ),
    (
        126772181,
        1.9368424746448476257,
        2.1563821916061563561,
        8.7476437183116884032,
    ),
    (
        128572571,
        1.9371629194549594868,
        2.1567946364933567996,
        8.7583498715012954391,
    ),
    (
        134917583,
        1.9382558363321882429,
        2.1582013494421585945,
        8.7950091481930809029,
    ),
    (
        137403373,
        1.9386693742771570126,
        2.1587336289649817691,
        8.8089388524282988835,
    ),
    (
        139109239,
        1.9389486457170330522,
        2.1590930915513016006,
        8.8183641570881472426,
    ),
    (
        149519347,
        1.9405786508460498763,
        2.1611911799846631842,
        8.8736715365823738997,
    ),
    (
        156644801,
        1.9416271076645666357,
        2.1625407520731394932,
        8.9095148173873819206,
    ),
    (
        171731479,
        1.9436908967186660365,
        2.1651973344378904799,
        8.9806893218689816071,
    ),
    (
        191018561,
        1.9460682904996937474,
        2.1682577248380422343,
        9.0637119290081911477,
    ),
    (
        196449557,
        1.9466924314164851191,
        2.1690611960644115574,
        9.0856933651111243494,
    ),
    (
        197681069,
        1.9468314424119365291,
        2.1692401494285413799,
        9.0905997265559890499,
    ),
    (
        203427379,
        1.947468294781042053,
        2.1700599959752778854,
        9.1131266944605865305,
    ),
    (
        219018043,
        1.9491054740570056745,
        2.1721676488745652172,
        9.1714119413006323018,
    ),
    (
        236719633,
        1.9508223282114593018,
        2.1743779405483521858,
        9.2331180869879861898,
    ),
    (
        239701031,
        1.9510982017218361459,
        2.1747331087683016274,
        9.2430896283827949012,
    ),
    (
        245407847,
        1.951616373846437512,
        2.1754002246732364786,
        9.2618614886476575315,
    ),
    (
        246494903,
        1.9517136444650485053,
        2.1755254555348324584,
        9.2653914935930522178,
    ),
    (
        247829089,
        1.9518324158649051121,
        2.1756783678355988291,
        9.2697044251461663692,
    ),
    (
        280370323,
        1.9545385937872190389,
        2.1791625278502160934,
        9.3687688191859883131,
    ),
    (
        290389301,
        1.9553058556010561899,
        2.1801503962322122036,
        9.3971353487180130499,
    ),
    (
        312304781,
        1.9568917073661930337,
        2.1821922629864018929,
        9.456162152369959627,
    ),
    (
        325681781,
        1.9578034001650165666,
        2.1833661416315273438,
        9.4903396915349492659,
    ),
    (
        339821723,
        1.9587254080318143398,
        2.1845533215565225314,
        9.5250861905209757551,
    ),
    (
        343112911,
        1.958934248758333662,
        2.1848222282270242565,
        9.5329820787906932166,
    ),
    (
        349624993,
        1.9593413583007660376,
        2.1853464319389764746,
        9.5484014111972317854,
    ),
    (
        351381203,
        1.9594497908838212155,
        2.1854860529075893758,
        9.5525143983371634021,
    ),
    (
        356238503,
        1.9597467624244041164,
        2.1858684435654112979,
        9.5637920456255298302,
    ),
    (
        373181323,
        1.9607504199328034413,
        2.1871608023704288556,
        9.6020493491778364962,
    ),
    (
        385696313,
        1.9614616146699317353,
        2.1880765859626633148,
        9.6292927213507348285,
    ),
    (
        392655503,
        1.9618467095370400714,
        2.1885724657092583492,
        9.6440910128588504646,
    ),
    (
        395464859,
        1.9620001484569616638,
        2.1887700472160756347,
        9.6499964697341910179,
    ),
    (
        397518601,
        1.9621115977427608136,
        2.1889135595054678614,
        9.6542891343664612965,
    ),
    (
        398190323,
        1.9621479189549381185,
        2.1889603300814768219,
        9.6556887057942789427,
    ),
    (
        399686411,
        1.9622285851502660065,
        2.1890642034984947875,
        9.6587980789242200619,
    ),
    (
        412686847,
        1.9629165190175479453,
        2.1899500583318268831,
        9.6853741798884012698,
    ),
    (
        416499301,
        1.9631139637686485132,
        2.1902043106632057423,
        9.6930213315426204616,
    ),
    (
        444404117,
        1.9645039755594201655,
        2.1919942737522450931,
        9.7471049181570104306,
    ),
    (
        451646183,
        1.9648498060621137687,
        2.1924396178567013344,
        9.7606284118386968591,
    ),
    (
        479768123,
        1.9661397991252419067,
        2.1941008342517939755,
        9.8113123854112471826,
    ),
    (
        494662813,
        1.966791356786374613,
        2.194939906403837165,
        9.8370565543509516301,
    ),
    (
        495741557,
        1.9668377458928888677,
        2.1949996464008893894,
        9.8388931810552162022,
    ),
    (
        502673771,
        1.9671333542107839464,
        2.1953803326415015558,
        9.8506084575953327342,
    ),
    (
        507003821,
        1.967315843215965184,
        2.1956153441379408393,
        9.8578507350017407821,
    ),
    (
        509116277,
        1.9674042813458086299,
        2.1957292360846791578,
        9.8613632609687530399,
    ),
    (
        509527391,
        1.9674214480362613083,
        2.1957513436265453106,
        9.8620452850615609093,
    ),
    (
        517995299,
        1.96777185123613762,
        2.1962026000365574399,
        9.8759814994403709304,
    ),
    (
        562821277,
        1.9695322324755469343,
        2.1984696981719851035,
        9.9464264066802768348,
    ),
    (
        568251779,
        1.9697354722188772684,
        2.1987314440870611744,
        9.9546059791533029681,
    ),
    (
        570930281,
        1.9698349699521771813,
        2.1988595843604745961,
        9.9586138892158908736,
    ),
    (
        573375107,
        1.9699253621373445393,
        2.1989759980590632886,
        9.962257028988502619,
    ),
    (
        588180007,
        1.9704642734719318596,
        2.1996700516116989587,
        9.9840170152266740636,
    ),
    (
        589729253,
        1.9705198456369431434,
        2.1997416223183288565,
        9.9862647795820935643,
    ),
    (
        590674199,
        1.9705536663752015938,
        2.1997851796654931811,
        9.9876331059809980526,
    ),
    (
        601571687,
        1.9709396613562433222,
        2.2002823001247114008,
        10.003268898985820053,
    ),
    (
        605985857,
        1.9710939372445718439,
        2.2004809920175568795,
        10.009528122393648104,
    ),
    (
        622657751,
        1.9716662044661973794,
        2.2012180197027605151,
        10.032795209245602629,
    ),
    (
        624488437,
        1.9717280647405066097,
        2.2012976905159161078,
        10.035314965385945877,
    ),
    (
        645384247,
        1.9724210090429733325,
        2.2021901503609653872,
        10.063602983067344877,
    ),
    (
        652453553,
        1.9726501418555949855,
        2.2024852585379576905,
        10.072982080522241011,
    ),
    (
        659410397,
        1.9728731093950558264,
        2.2027724274106624826,
        10.082120882361002532,
    ),
    (
        660060367,
        1.9728938152487018728,
        2.2027990953717780438,
        10.082970160781916137,
    ),
    (
        669936613,
        1.9732058423996675666,
        2.2032009697862523457,
        10.095780833106634642,
    ),
    (
        681786877,
        1.9735739499942113025,
        2.2036750757337107842,
        10.110924054720103309,
    ),
    (
        683294657,
        1.9736203062417001393,
        2.203734780707993707,
        10.112833372974398215,
    ),
    (
        687543133,
        1.9737503514336252822,
        2.203902273927622078,
        10.118192432183500539,
    ),
    (
        701216083,
        1.9741632467522791729,
        2.2044340698554886465,
        10.135234587655696432,
    ),
    (
        706866073,
        1.9743314133139265416,
        2.2046506641234481975,
        10.142187440192261852,
    ),
    (
        724199429,
        1.9748386896940327043,
        2.2053040272018137209,
        10.163202347085424553,
    ),
    (
        731849683,
        1.9750585579277696169,
        2.2055872154777513807,
        10.1723302419090938,
    ),
    (
        764623129,
        1.9759740361409796035,
        2.2067663550606759398,
        10.210463385903512728,
    ),
    (
        768338723,
        1.9760752280084953054,
        2.2068966917772327483,
        10.214690998647515567,
    ),
    (
        768792119,
        1.9760875409385189464,
        2.2069125510408581481,
        10.215205581950611366,
    ),
    (
        773821339,
        1.9762236133000814132,
        2.2070878147937491548,
        10.220894810711324596,
    ),
    (
        786224321,
        1.9765552809885168847,
        2.2075150107860598227,
        10.234781002647979155,
    ),
    (
        787568413,
        1.9765908944608545282,
        2.2075608819494864768,
        10.236273668898459807,
    ),
    (
        791120459,
        1.9766847056731583112,
        2.2076817135943618547,
        10.240207070210300583,
    ),
    (
        817821241,
        1.9773761016097586304,
        2.208572258487808644,
        10.269263529499741655,
    ),
    (
        830199631,
        1.9776886675163170735,
        2.2089748591693767896,
        10.28243817898957494,
    ),
    (
        846537277,
        1.9780938338728544044,
        2.2094967372637732983,
        10.299552032630792304,
    ),
    (
        848590949,
        1.9781441850956203101,
        2.2095615928642677704,
        10.301681674073721907,
    ),
    (
        865520309,
        1.9785544654634972395,
        2.2100900624402134252,
        10.319058329602399485,
    ),
    (
        871353577,
        1.9786938942323207172,
        2.210269657250526735,
        10.324973138217030157,
    ),
    (
        872113439,
        1.9787119848841520283,
        2.2102929594125638287,
        10.325740930927592587,
    ),
    (
        896507431,
        1.9792841638171314966,
        2.2110299741286644214,
        10.350067287228535036,
    ),
    (
        902878573,
        1.9794309258246069508,
        2.2112190171861214515,
        10.356320148514608598,
    ),
    (
        915503219,
        1.9797185703961110875,
        2.2115895314727867847,
        10.36859108162470717,
    ),
    (
        918546067,
        1.9797872800166273872,
        2.2116780364531554226,
        10.371525319259995052,
    ),
    (
        936026863,
        1.9801774580050837399,
        2.2121806274531137567,
        10.388210405919029654,
    ),
    (
        941019029,
        1.9802874885184375788,
        2.2123223591618137775,
        10.392922562550518001,
    ),
    (
        951007721,
        1.9805058265287147463,
        2.2126036039651434567,
        10.4022821530625642,
    ),
    (
        954914993,
        1.9805905825915544806,
        2.2127127799476470883,
        10.405918680091538017,
    ),
    (
        963902351,
        1.9807841680990854082,
        2.2129621419382771434,
        10.414231451140967135,
    ),
    (
        999206419,
        1.9815267756987892651,
        2.2139187200435339581,
        10.446208153893734462,
    ),
];

fn close(got: f64, want: f64) -> bool {
    ((got - want) / want).abs() < 1e-10
}

#[test]
fn bounds_match_reference_values() {
    for &(p, u1, u0, g) in REFERENCE {
        let a = bound_value(p, BoundKind::Unconditional { epsilon: 0.1 }).unwrap();
        let b = bound_value(p, BoundKind::Unconditional { epsilon: 0.0 }).unwrap();
        let c = bound_value(p, BoundKind::Grh { c: 1.0 }).unwrap();
        assert!(close(a, u1), "p={p}: {a} vs {u1}");
        assert!(close(b, u0), "p={p}: {b} vs {u0}");
        assert!(close(c, g), "p={p}: {c} vs {g}");
    }
}

#[test]
fn grh_bound_scales_linearly_in_c() {
    for &(p, _, _, g) in REFERENCE.iter().step_by(10) {
        let c = bound_value(p, BoundKind::Grh { c: 2.5 }).unwrap();
        assert!(close(c, 2.5 * g));
    }
}

#[test]
fn rejects_small_primes_and_bad_parameters() {
    assert!(bound_value(13, BoundKind::Grh { c: 1.0 }).is_err());
    assert!(bound_value(17, BoundKind::Grh { c: 0.0 }).is_err());
    assert!(bound_value(17, BoundKind::Unconditional { epsilon: -0.5 }).is_err());
    assert!(bound_value(17, BoundKind::Unconditional { epsilon: f64::NAN }).is_err());
}
