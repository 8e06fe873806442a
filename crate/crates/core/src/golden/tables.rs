// Reference values, transcribed mechanically. Do not edit by hand.
//
// Compact polynomial text: juxtaposition multiplies. In the generic rows `c1..c8` are
// Chern classes of the bundle (exterior powers) or of `X` (Todd, Riemann-Roch rows),
// `f1..f8` those of the bundle, `t` the twist and `H` is set to 1. In the Ulrich rows
// `r` is the rank placeholder, `e1..e8` the bundle classes and `m` stands for the
// Euler characteristic of the structure sheaf.

use super::{ExteriorRow, ExteriorChiRow, RrRow, TopChernRow, UlrichRow, UlrichChernRow};

pub const EXTERIOR: &[ExteriorRow] = &[
    ExteriorRow {
        id: "w4.1",
        rank: 4,
        power: 2,
        degree: 1,
        text: "3c1",
    },
    ExteriorRow {
        id: "w4.2",
        rank: 4,
        power: 2,
        degree: 2,
        text: "3c1^2+2c2",
    },
    ExteriorRow {
        id: "w4.3",
        rank: 4,
        power: 2,
        degree: 3,
        text: "c1^3+4c1c2",
    },
    ExteriorRow {
        id: "w4.4",
        rank: 4,
        power: 2,
        degree: 4,
        text: "2c1^2c2+c2^2+c1c3-4c4",
    },
    ExteriorRow {
        id: "w4.5",
        rank: 4,
        power: 2,
        degree: 5,
        text: "c1c2^2+c1^2c3-4c1c4",
    },
    ExteriorRow {
        id: "w4.6",
        rank: 4,
        power: 2,
        degree: 6,
        text: "c1c2c3-c3^2-c1^2c4",
    },
    ExteriorRow {
        id: "w5.1",
        rank: 5,
        power: 2,
        degree: 1,
        text: "4c1",
    },
    ExteriorRow {
        id: "w5.2",
        rank: 5,
        power: 2,
        degree: 2,
        text: "6c1^2+3c2",
    },
    ExteriorRow {
        id: "w5.3",
        rank: 5,
        power: 2,
        degree: 3,
        text: "4c1^3+9c1c2+c3",
    },
    ExteriorRow {
        id: "w5.4",
        rank: 5,
        power: 2,
        degree: 4,
        text: "c1^4+9c1^2c2+3c2^2+4c1c3-3c4",
    },
    ExteriorRow {
        id: "w5.5",
        rank: 5,
        power: 2,
        degree: 5,
        text: "3c1^3c2+6c1c2^2+5c1^2c3+2c2c3-5c1c4-11c5",
    },
    ExteriorRow {
        id: "w5.6",
        rank: 5,
        power: 2,
        degree: 6,
        text: "3c1^2c2^2+c2^3+2c1^3c3+6c1c2c3-c3^2-2c1^2c4-2c2c4-22c1c5",
    },
    ExteriorRow {
        id: "w6.1",
        rank: 6,
        power: 2,
        degree: 1,
        text: "5c1",
    },
    ExteriorRow {
        id: "w6.2",
        rank: 6,
        power: 2,
        degree: 2,
        text: "10c1^2+4c2",
    },
    ExteriorRow {
        id: "w6.3",
        rank: 6,
        power: 2,
        degree: 3,
        text: "10c1^3+16c1c2+2c3",
    },
    ExteriorRow {
        id: "w6.4",
        rank: 6,
        power: 2,
        degree: 4,
        text: "5c1^4+24c1^2c2+6c2^2+9c1c3-2c4",
    },
    ExteriorRow {
        id: "w6.5",
        rank: 6,
        power: 2,
        degree: 5,
        text: "c1^5+16c1^3c2+18c1c2^2+15c1^2c3+6c2c3-4c1c4-10c5",
    },
    ExteriorRow {
        id: "w6.6",
        rank: 6,
        power: 2,
        degree: 6,
        text: "4c1^4c2+18c1^2c2^2+4c2^3+11c1^3c3+21c1c2c3-c1^2c4-2c2c4-29c1c5-26c6",
    },
    ExteriorRow {
        id: "w6.7",
        rank: 6,
        power: 2,
        degree: 7,
        text: concat!(
            "6c1^3c2^2+8c1c2^3+3c1^4c3+24c1^2c2c3+6c2^2c3+3c1c3^2+2c1^3c4+2c1c2c4",
            "-6c3c4-32c1^2c5-12c2c5-78c1c6",
        ),
    },
    ExteriorRow {
        id: "w6.8",
        rank: 6,
        power: 2,
        degree: 8,
        text: concat!(
            "4c1^2c2^3+c2^4+9c1^3c2c3+15c1c2^2c3+6c1^2c3^2+c1^4c4+8c1^2c2c4+2c2^2c4",
            "-8c1c3c4-7c4^2-16c1^3c5-26c1c2c5-3c3c5-94c1^2c6-24c2c6",
        ),
    },
    ExteriorRow {
        id: "w6.9",
        rank: 6,
        power: 3,
        degree: 1,
        text: "10c1",
    },
    ExteriorRow {
        id: "w6.10",
        rank: 6,
        power: 3,
        degree: 2,
        text: "45c1^2+6c2",
    },
    ExteriorRow {
        id: "w6.11",
        rank: 6,
        power: 3,
        degree: 3,
        text: "120c1^3+54c1c2",
    },
    ExteriorRow {
        id: "w6.12",
        rank: 6,
        power: 3,
        degree: 4,
        text: "210c1^4+216c1^2c2+15c2^2+3c1c3-6c4",
    },
    ExteriorRow {
        id: "w6.13",
        rank: 6,
        power: 3,
        degree: 5,
        text: "252c1^5+504c1^3c2+120c1c2^2+24c1^2c3-48c1c4",
    },
    ExteriorRow {
        id: "w6.14",
        rank: 6,
        power: 3,
        degree: 6,
        text: concat!(
            "210c1^6+756c1^4c2+420c1^2c2^2+20c2^3+84c1^3c3+15c1c2c3-3c3^2-169c1^2c4",
            "-22c2c4-11c1c5+66c6",
        ),
    },
    ExteriorRow {
        id: "w6.15",
        rank: 6,
        power: 3,
        degree: 7,
        text: concat!(
            "120c1^7+756c1^5c2+840c1^3c2^2+140c1c2^3+168c1^4c3+105c1^2c2c3-21c1c3^2",
            "-343c1^3c4-154c1c2c4-77c1^2c5+462c1c6",
        ),
    },
    ExteriorRow {
        id: "w6.16",
        rank: 6,
        power: 3,
        degree: 8,
        text: concat!(
            "45c1^8+504c1^6c2+1050c1^4c2^2+420c1^2c2^3+15c2^4+210c1^5c3+315c1^3c2c3",
            "+30c1c2^2c3-60c1^2c3^2-12c2c3^2-441c1^4c4-465c1^2c2c4-28c2^2c4",
            "-13c1c3c4+c4^2-234c1^3c5-47c1c2c5+36c3c5+1444c1^2c6+138c2c6",
        ),
    },
    ExteriorRow {
        id: "w7.1",
        rank: 7,
        power: 2,
        degree: 1,
        text: "6c1",
    },
    ExteriorRow {
        id: "w7.2",
        rank: 7,
        power: 2,
        degree: 2,
        text: "15c1^2+5c2",
    },
    ExteriorRow {
        id: "w7.3",
        rank: 7,
        power: 2,
        degree: 3,
        text: "20c1^3+25c1c2+3c3",
    },
    ExteriorRow {
        id: "w7.4",
        rank: 7,
        power: 2,
        degree: 4,
        text: "15c1^4+50c1^2c2+10c2^2+16c1c3-c4",
    },
    ExteriorRow {
        id: "w7.5",
        rank: 7,
        power: 2,
        degree: 5,
        text: "6c1^5+50c1^3c2+40c1c2^2+34c1^2c3+12c2c3-c1c4-9c5",
    },
    ExteriorRow {
        id: "w7.6",
        rank: 7,
        power: 2,
        degree: 6,
        text: concat!(
            "c1^6+25c1^4c2+60c1^2c2^2+10c2^3+36c1^3c3+52c1c2c3+2c3^2+5c1^2c4-34c1c5",
            "-25c6",
        ),
    },
    ExteriorRow {
        id: "w7.7",
        rank: 7,
        power: 2,
        degree: 7,
        text: concat!(
            "5c1^5c2+40c1^3c2^2+30c1c2^3+19c1^4c3+84c1^2c2c3+18c2^2c3+12c1c3^2",
            "+11c1^3c4+12c1c2c4-6c3c4-51c1^2c5-18c2c5-99c1c6-57c7",
        ),
    },
    ExteriorRow {
        id: "w7.8",
        rank: 7,
        power: 2,
        degree: 8,
        text: concat!(
            "10c1^4c2^2+30c1^2c2^3+5c2^4+4c1^5c3+60c1^3c2c3+60c1c2^2c3+24c1^2c3^2",
            "+6c2c3^2+8c1^4c4+33c1^2c2c4+6c2^2c4-9c1c3c4-9c4^2-38c1^3c5-51c1c2c5",
            "-11c3c5-162c1^2c6-46c2c6-228c1c7",
        ),
    },
    ExteriorRow {
        id: "w7.9",
        rank: 7,
        power: 3,
        degree: 1,
        text: "15c1",
    },
    ExteriorRow {
        id: "w7.10",
        rank: 7,
        power: 3,
        degree: 2,
        text: "105c1^2+10c2",
    },
    ExteriorRow {
        id: "w7.11",
        rank: 7,
        power: 3,
        degree: 3,
        text: "455c1^3+140c1c2+2c3",
    },
    ExteriorRow {
        id: "w7.12",
        rank: 7,
        power: 3,
        degree: 4,
        text: "1365c1^4+910c1^2c2+45c2^2+32c1c3-8c4",
    },
    ExteriorRow {
        id: "w7.13",
        rank: 7,
        power: 3,
        degree: 5,
        text: "3003c1^5+3640c1^3c2+585c1c2^2+234c1^2c3+18c2c3-102c1c4-10c5",
    },
    ExteriorRow {
        id: "w7.14",
        rank: 7,
        power: 3,
        degree: 6,
        text: concat!(
            "5005c1^6+10010c1^4c2+3510c1^2c2^2+120c2^3+1040c1^3c3+270c1c2c3-3c3^2",
            "-600c1^2c4-60c2c4-140c1c5+40c6",
        ),
    },
    ExteriorRow {
        id: "w7.15",
        rank: 7,
        power: 3,
        degree: 7,
        text: concat!(
            "6435c1^7+20020c1^5c2+12870c1^3c2^2+1440c1c2^3+3146c1^4c3+1836c1^2c2c3",
            "+72c2^2c3-27c1c3^2-2156c1^3c4-702c1c2c4-18c3c4-904c1^2c5-72c2c5",
            "+454c1c6+302c7",
        ),
    },
    ExteriorRow {
        id: "w7.16",
        rank: 7,
        power: 3,
        degree: 8,
        text: concat!(
            "6435c1^8+30030c1^6c2+32175c1^4c2^2+7920c1^2c2^3+210c2^4+6864c1^5c3",
            "+7524c1^3c2c3+1008c1c2^2c3-84c1^2c3^2-24c2c3^2-5280c1^4c4-3759c1^2c2c4",
            "-192c2^2c4-237c1c3c4+6c4^2-3570c1^3c5-951c1c2c5+33c3c5+2370c1^2c6",
            "+222c2c6+3624c1c7",
        ),
    },
];

pub const TODD: &str = concat!(
    "1+(1)/(2)c1+(1)/(12)(c1^2+c2)+(1)/(24)c1c2-(1)/(720)(c1^4-4c1^2c2",
    "-3c2^2-c1c3+c4)-(1)/(1440)(c1^3c2-3c1c2^2-c1^2c3+c1c4)",
    "+(1)/(60480)(2c1^6-12c1^4c2+11c1^2c2^2+10c2^3+5c1^3c3+11c1c2c3-c3^2",
    "-5c1^2c4-9c2c4-2c1c5+2c6)+(1)/(120960)(2c1^5c2-10c1^3c2^2+10c1c2^3",
    "-2c1^4c3+11c1^2c2c3-c1c3^2+2c1^3c4-9c1c2c4-2c1^2c5+2c1c6)",
    "-(1)/(3628800)(3c1^8-24c1^6c2+50c1^4c2^2-8c1^2c2^3-21c2^4+14c1^5c3",
    "-26c1^3c2c3-50c1c2^2c3-3c1^2c3^2+8c2c3^2-14c1^4c4+19c1^2c2c4+34c2^2c4",
    "+13c1c3c4-5c4^2+7c1^3c5+16c1c2c5-3c3c5-7c1^2c6-13c2c6-3c1c7+3c8)",
);

pub const CHERN_CHARACTER: &str = concat!(
    "f1+(1)/(2)(f1^2-2f2)+(1)/(6)(f1^3-3f1f2+3f3)+(1)/(24)(f1^4-4f1^2f2",
    "+4f1f3+2f2^2-4f4)+(1)/(120)(f1^5-5f1^3f2+5f1f2^2+5f1^2f3-5f2f3-5f1f4",
    "+5f5)+(1)/(720)(f1^6-6f1^4f2+9f1^2f2^2-2f2^3+6f1^3f3-12f1f2f3+3f3^2",
    "-6f1^2f4+6f2f4+6f1f5-6f6)+(1)/(5040)(f1^7-7f1^5f2+14f1^3f2^2-7f1f2^3",
    "+7f1^4f3-21f1^2f2f3+7f2^2f3+7f1f3^2-7f1^3f4+14f1f2f4-7f3f4+7f1^2f5",
    "-7f2f5-7f1f6+7f7)+(1)/(40320)(f1^8-8f1^6f2+20f1^4f2^2-16f1^2f2^3+2f2^4",
    "+8f1^5f3-32f1^3f2f3+24f1f2^2f3+12f1^2f3^2-8f2f3^2-8f1^4f4+24f1^2f2f4",
    "-8f2^2f4-16f1f3f4+4f4^2+8f1^3f5-16f1f2f5+8f3f5-8f1^2f6+8f2f6+8f1f7",
    "-8f8)",
);

pub const RIEMANN_ROCH: &[RrRow] = &[
    RrRow {
        id: "rr6",
        rank: 6,
        text: concat!(
            "(1)/(10080)(2c1^6-2c1c5+2c6+11c1^2c2^2+11c1c2c3-c3^2)-(1)/(840)c1^4c2",
            "+(1)/(2016)(2c2^3+c1^3c3-c1^2c4)-(1)/(1120)c2c4-(1)/(1440)(c1^3c2f1",
            "-c1^2c3f1+c1c4f1+c1^4f1^2-c1c3f1^2+c4f1^2)+(1)/(480)(c1c2^2f1+c2^2f1^2",
            "+2c1f1^5-2c2^2f2+2f3^2)+(1)/(288)(2c1c2f1^3+c1^2f1^4+c2f1^4+2c1^2f2^2",
            "+2c2f2^2)+(1)/(720)(f1^6-2f2^3+c1^4f2-c1c3f2+c4f2-4c1^2c2f2",
            "+2c1^2c2f1^2)-(1)/(48)(c1c2f1f2+c1f1^3f2-c1f1f2^2-c1c2f3-c1f1^2f3",
            "+c1f2f3+c1f1f4-c1f5)+(1)/(72)(-c1^2f1^2f2-c2f1^2f2+c1^2f1f3+c2f1f3",
            "-c1^2f4-c2f4)+(1)/(80)f1^2f2^2-(1)/(120)(2f1f2f3+f1^4f2-f1^3f3+f1^2f4",
            "-f2f4-f1f5+f6)",
        ),
    },
    RrRow {
        id: "rr10",
        rank: 10,
        text: concat!(
            "(1)/(120)(f1f5-f6-f1^2f4+f2f4+f1^3f3-f1^4f2)+(1)/(48)(-c1f1f4+c1f5",
            "-c1f2f3+c1f1^2f3+c1c2f3+c1f1f2^2-c1f1^3f2-c1c2f1f2)+(1)/(72)(-c1^2f4",
            "-c2f4+c2f1f3+c1^2f1f3-c2f1^2f2-c1^2f1^2f2)+(1)/(240)(f3^2-c2^2f2",
            "+c1f1^5)-(1)/(60)f1f2f3+(1)/(360)(-f2^3+c1^2c2f1^2)+(1)/(80)f1^2f2^2",
            "+(1)/(144)(c1^2f2^2+c2f2^2+c1c2f1^3)+(1)/(720)(-c1c3f2+c4f2+f1^6",
            "+c1^4f2)-(1)/(180)c1^2c2f2+(1)/(288)(c1^2f1^4+c2f1^4)",
            "+(1)/(1440)(c1c3f1^2-c4f1^2+c1^2c3f1-c1c4f1-c1^4f1^2-c1^3c2f1)",
            "+(1)/(480)(c2^2f1^2+c1c2^2f1)+(1)/(3024)(c1^6+5c2^3-c1c5+c6)",
            "-(1)/(672)c2c4+(1)/(6048)(5c1^3c3+11c1c2c3-c3^2-5c1^2c4+11c1^2c2^2)",
            "-(1)/(504)c1^4c2",
        ),
    },
];

pub const EXTERIOR_CHI: &[ExteriorChiRow] = &[
    ExteriorChiRow {
        id: "chiw24",
        rank: 4,
        text: concat!(
            "(1)/(120)t^6+(1)/(40)(c1+f1)t^5+(1)/(48)(c1^2+c2+3c1f1+3f1^2-4f2)t^4",
            "+(1)/(24)(c1c2+c1^2f1+c2f1+3c1f1^2+2f1^3-4c1f2-4f1f2)t^3+(1)/(240)(",
            "-c1^4+4c1^2c2+3c2^2+c1c3-c4+15c1c2f1+15c1^2f1^2+15c2f1^2+30c1f1^3",
            "+15f1^4-20c1^2f2-20c2f2-60c1f1f2-40f1^2f2+20f2^2-20f1f3+80f4)t^2",
            "+(1)/(240)(-c1^3c2+3c1c2^2+c1^2c3-c1c4-c1^4f1+4c1^2c2f1+3c2^2f1+c1c3f1",
            "-c4f1+15c1c2f1^2+10c1^2f1^3+10c2f1^3+15c1f1^4+6f1^5-20c1c2f2",
            "-20c1^2f1f2-20c2f1f2-40c1f1^2f2-20f1^3f2+20c1f2^2+20f1f2^2-20c1f1f3",
            "-20f1^2f3+80c1f4+80f1f4)t+(1)/(10080)(2c1^6-12c1^4c2+11c1^2c2^2+10c2^3",
            "+5c1^3c3+11c1c2c3-c3^2-5c1^2c4-9c2c4-2c1c5+2c6-21c1^3c2f1+63c1c2^2f1",
            "+21c1^2c3f1-21c1c4f1-21c1^4f1^2+84c1^2c2f1^2+63c2^2f1^2+21c1c3f1^2",
            "-21c4f1^2+210c1c2f1^3+105c1^2f1^4+105c2f1^4+126c1f1^5+42f1^6+28c1^4f2",
            "-112c1^2c2f2-84c2^2f2-28c1c3f2+28c4f2-420c1c2f1f2-280c1^2f1^2f2",
            "-280c2f1^2f2-420c1f1^3f2-168f1^4f2+140c1^2f2^2+140c2f2^2+420c1f1f2^2",
            "+252f1^2f2^2-56f2^3-140c1^2f1f3-140c2f1f3-420c1f1^2f3-252f1^3f3",
            "+84f1f2f3+84f3^2+560c1^2f4+560c2f4+1680c1f1f4+1092f1^2f4-672f2f4)",
        ),
    },
    ExteriorChiRow {
        id: "chiw25",
        rank: 5,
        text: concat!(
            "(1)/(72)t^6+(1)/(120)(5c1+4f1)t^5+(1)/(144)(5c1^2+5c2+12c1f1+12f1^2",
            "-18f2)t^4+(1)/(72)(5c1c2+4c1^2f1+4c2f1+12c1f1^2+8f1^3-18c1f2-18f1f2",
            "+6f3)t^3+(1)/(144)(-c1^4+4c1^2c2+3c2^2+c1c3-c4+12c1c2f1+12c1^2f1^2",
            "+12c2f1^2+24c1f1^3+12f1^4-18c1^2f2-18c2f2-54c1f1f2-36f1^2f2+18f2^2",
            "+18c1f3+36f4)t^2+(1)/(720)(-5c1^3c2+15c1c2^2+5c1^2c3-5c1c4-4c1^4f1",
            "+16c1^2c2f1+12c2^2f1+4c1c3f1-4c4f1+60c1c2f1^2+40c1^2f1^3+40c2f1^3",
            "+60c1f1^4+24f1^5-90c1c2f2-90c1^2f1f2-90c2f1f2-180c1f1^2f2-90f1^3f2",
            "+90c1f2^2+90f1f2^2+30c1^2f3+30c2f3-30f1^2f3-30f2f3+180c1f4+210f1f4",
            "-330f5)t+(1)/(30240)(10c1^6-60c1^4c2+55c1^2c2^2+50c2^3+25c1^3c3",
            "+55c1c2c3-5c3^2-25c1^2c4-45c2c4-10c1c5+10c6-84c1^3c2f1+252c1c2^2f1",
            "+84c1^2c3f1-84c1c4f1-84c1^4f1^2+336c1^2c2f1^2+252c2^2f1^2+84c1c3f1^2",
            "-84c4f1^2+840c1c2f1^3+420c1^2f1^4+420c2f1^4+504c1f1^5+168f1^6",
            "+126c1^4f2-504c1^2c2f2-378c2^2f2-126c1c3f2+126c4f2-1890c1c2f1f2",
            "-1260c1^2f1^2f2-1260c2f1^2f2-1890c1f1^3f2-756f1^4f2+630c1^2f2^2",
            "+630c2f2^2+1890c1f1f2^2+1134f1^2f2^2-252f2^3+630c1c2f3-630c1f1^2f3",
            "-504f1^3f3-630c1f2f3-252f1f2f3+378f3^2+1260c1^2f4+1260c2f4+4410c1f1f4",
            "+3024f1^2f4-1764f2f4-6930c1f5-5544f1f5)",
        ),
    },
];

pub const ULRICH_EXTERIOR_CHI: &[UlrichRow] = &[
    UlrichRow {
        id: "suz4.1",
        n: 6,
        rank: 4,
        power: 2,
        text: concat!(
            "(d)/(120)m^6-(d)/(40)(-10+3d)m^5+(5d)/(72)(44-27d+4d^2)m^4-(d)/(72)(",
            "-1400+1320d-400d^2+39d^3)m^3+(d)/(360)(24419-31500d+14670d^2-2925d^3",
            "+208d^4)m^2-(d)/(360)(-44190+73257d-46700d^2+14310d^3-2080d^4+111d^5)m",
            "+(d)/(340200)(30562169-62639325d+51356676d^2-21546000d^3+4812171d^4",
            "-524475d^5+19984d^6)",
        ),
    },
    UlrichRow {
        id: "suz5.1",
        n: 6,
        rank: 5,
        power: 2,
        text: concat!(
            "(d)/(72)m^6-(d)/(24)(-11+4d)m^5+(5d)/(576)(713-528d+95d^2)m^4",
            "-(5d)/(288)(-2519+2852d-1045d^2+124d^3)m^3+(d)/(576)(98122-151140d",
            "+84675d^2-20460d^3+1795d^4)m^2-(d)/(576)(-199551+392488d-299200d^2",
            "+110540d^3-19745d^4+1356d^5)m+(d)/(1548288)(444410639-1072786176d",
            "+1044516123d^2-525127680d^3+143409693d^4-20047104d^5+1107385d^6)",
        ),
    },
    UlrichRow {
        id: "suz5.2",
        n: 6,
        rank: 5,
        power: 3,
        text: concat!(
            "(d)/(72)m^6-(d)/(24)(-10+3d)m^5+(5d)/(576)(587-360d+53d^2)m^4",
            "-(5d)/(288)(-10+3d)(187-120d+17d^2)m^3+(d)/(576)(65362-84150d+38895d^2",
            "-7650d^3+535d^4)m^2-(d)/(288)(-10+3d)(5931-8025d+3790d^2-735d^3",
            "+47d^4)m+(d)/(1548288)(234265319-478275840d+388398675d^2-160473600d^3",
            "+35211813d^4-3790080d^5+146593d^6)",
        ),
    },
    UlrichRow {
        id: "suz6.1",
        n: 8,
        rank: 6,
        power: 2,
        text: concat!(
            "(d)/(2688)m^8-(d)/(672)(-14+5d)m^7+(d)/(960)(483-350d+62d^2)m^6",
            "-(d)/(960)(-14+5d)(469-350d+61d^2)m^5+(d)/(1920)(109837-164150d",
            "+89840d^2-21350d^3+1858d^4)m^4-(d)/(960)(-14+5d)(20657-31850d+17705d^2",
            "-4200d^3+358d^4)m^3+(d)/(6720)(6549514-15182895d+14302806d^2",
            "-7010675d^3+1884820d^4-263130d^5+14870d^6)m^2-(d)/(13440)(-14",
            "+5d)(1699080-4071410d+3926321d^2-1949220d^3+524314d^4-72170d^5",
            "+3965d^6)m+(d)/(169344000)(233706519541-749294280000d+1023683569750d^2",
            "-778550661000d^3+360297139573d^4-103729374000d^5+18104141400d^6",
            "-1748565000d^7+71669736d^8)",
        ),
    },
    UlrichRow {
        id: "suz6.2",
        n: 8,
        rank: 6,
        power: 3,
        text: concat!(
            "(d)/(2016)m^8-(d)/(504)(-13+4d)m^7+(d)/(2160)(1247-780d+118d^2)m^6",
            "-(d)/(360)(-13+4d)(201-130d+19d^2)m^5+(d)/(4320)(241996-313560d",
            "+147155d^2-29640d^3+2154d^4)m^4-(d)/(2160)(-13+4d)(45111-60580d",
            "+28805d^2-5720d^3+394d^4)m^3+(d)/(30240)(24379978-49261212d",
            "+39993401d^2-16691220d^3+3762129d^4-430248d^5+19032d^6)m^2",
            "-(d)/(30240)(-13+4d)(3116229-6542692d+5444216d^2-2290964d^3+509035d^4",
            "-55224d^5+2040d^6)m+(d)/(508032000)(483969803049-1361168827200d",
            "+1612701345950d^2-1050469056000d^3+409833928497d^4-97149124800d^5",
            "+13318661400d^6-891072000d^7+14981104d^8)",
        ),
    },
    UlrichRow {
        id: "suz6.3",
        n: 8,
        rank: 6,
        power: 4,
        text: concat!(
            "(d)/(2688)m^8-(d)/(224)(-4+d)m^7+(d)/(960)(353-180d+22d^2)m^6",
            "-(3d)/(320)(-4+d)(113-60d+7d^2)m^5+(d)/(1920)(57317-61020d+23300d^2",
            "-3780d^3+218d^4)m^4-(d)/(320)(-4+d)(10517-11700d+4535d^2-720d^3",
            "+38d^4)m^3+(d)/(3360)(1185579-1987713d+1324764d^2-448875d^3+80843d^4",
            "-7182d^5+239d^6)m^2-(d)/(4480)(-4+d)(590076-1038060d+713205d^2",
            "-243720d^3+42698d^4-3420d^5+101d^6)m+(d)/(169344000)(56633150341",
            "-133829236800d+131659211350d^2-70341793200d^3+22114878373d^4",
            "-4099183200d^5+425383800d^6-22906800d^7+656136d^8)",
        ),
    },
    UlrichRow {
        id: "suz7.1",
        n: 8,
        rank: 7,
        power: 2,
        text: concat!(
            "(d)/(1920)m^8-(d)/(160)(-5+2d)m^7+(7d)/(8640)(-20+7d)(-50+23d)m^6",
            "-(7d)/(960)(-5+2d)(325-270d+53d^2)m^5+(7d)/(138240)(2110467-3510000d",
            "+2146690d^2-572400d^3+56147d^4)m^4-(7d)/(23040)(-5+2d)(400467-684000d",
            "+424090d^2-113040d^3+10931d^4)m^3+(d)/(138240)(294927561-756882630d",
            "+792886542d^2-434114100d^3+131018209d^4-20659590d^5+1328936d^6)m^2",
            "-(d)/(23040)(-5+2d)(19408518-51222105d+54741054d^2-30313350d^3",
            "+9168002d^4-1434465d^5+90682d^6)m+(d)/(143327232000)(513397845100961",
            "-1811047631616000d+2735536296233740d^2-2311436590848000d^3",
            "+1194935635595478d^4-386871738624000d^5+76557801497260d^6",
            "-8461718784000d^7+399973316561d^8)",
        ),
    },
    UlrichRow {
        id: "suz7.2",
        n: 8,
        rank: 7,
        power: 3,
        text: concat!(
            "(d)/(1152)m^8-(d)/(288)(-14+5d)m^7+(7d)/(1728)(290-210d+37d^2)m^6",
            "-(7d)/(288)(-14+5d)(47-35d+6d^2)m^5+(7d)/(138240)(2647681-3948000d",
            "+2146070d^2-504000d^3+43089d^4)m^4-(7d)/(69120)(-14+5d)(499521-767200d",
            "+421670d^2-98000d^3+8089d^4)m^3+(d)/(414720)(954207685-2202887610d",
            "+2057673702d^2-995204700d^3+262468605d^4-35672490d^5+1939448d^6)m^2",
            "-(d)/(414720)(-14+5d)(124417969-296353470d+282424737d^2-137577300d^3",
            "+35979531d^4-4750830d^5+242723d^6)m+(d)/(8957952000)(29526126063793",
            "-94059984564000d+127169755078220d^2-95268653172000d^3",
            "+43183463113014d^4-12086573436000d^5+2026225100780d^6-183498588000d^7",
            "+6668724193d^8)",
        ),
    },
    UlrichRow {
        id: "suz7.3",
        n: 8,
        rank: 7,
        power: 4,
        text: concat!(
            "(d)/(1152)m^8-(d)/(288)(-13+4d)m^7+(7d)/(3456)(499-312d+47d^2)m^6",
            "-(7d)/(1152)(-7+3d)(-13+4d)(-23+5d)m^5+(7d)/(34560)(485239-627900d",
            "+293180d^2-58500d^3+4191d^4)m^4-(7d)/(17280)(-13+4d)(90624-121420d",
            "+57245d^2-11180d^3+751d^4)m^3+(d)/(51840)(73648124-148442112d",
            "+119778477d^2-49475790d^3+10983966d^4-1230138d^5+53053d^6)m^2",
            "-(d)/(103680)(-13+4d)(18886837-39510588d+32595240d^2-13514280d^3",
            "+2935833d^4-308412d^5+11210d^6)m+(d)/(4478976000)(7572278446559",
            "-21213695318400d+24947874489460d^2-16064770176000d^3+6166188349482d^4",
            "-1429690953600d^5+190927651540d^6-12591072000d^7+242742959d^8)",
        ),
    },
    UlrichRow {
        id: "suz7.4",
        n: 8,
        rank: 7,
        power: 5,
        text: concat!(
            "(d)/(1920)m^8-(d)/(160)(-4+d)m^7+(7d)/(17280)(1271-648d+79d^2)m^6",
            "-(7d)/(1920)(-4+d)(407-216d+25d^2)m^5+(7d)/(34560)(206553-219780d",
            "+83680d^2-13500d^3+773d^4)m^4-(7d)/(5760)(-4+d)(37929-42156d+16261d^2",
            "-2556d^3+134d^4)m^3+(d)/(17280)(8560242-14337162d+9522975d^2",
            "-3207330d^3+573356d^4-50652d^5+1687d^6)m^2-(d)/(11520)(-4+d)(2133108",
            "-3746844d+2561847d^2-867816d^3+150574d^4-12060d^5+359d^6)m",
            "+(d)/(143327232000)(67498793060561-159235658956800d+156004224862540d^2",
            "-82788720537600d^3+25821414047478d^4-4758314803200d^5+494189940460d^6",
            "-26799206400d^7+743464961d^8)",
        ),
    },
];

pub const ULRICH_CHERN: &[UlrichChernRow] = &[
    UlrichChernRow {
        id: "xne.1",
        rank: None,
        degree: 1,
        text: "(r)/(2)(d-1)",
    },
    UlrichChernRow {
        id: "xne.2",
        rank: None,
        degree: 2,
        text: "(r)/(24)(d-1)(3rd-2d-3r+4)1",
    },
    UlrichChernRow {
        id: "xne.3",
        rank: None,
        degree: 3,
        text: "(r)/(48)(r-2)(d-1)^2(dr-r+2)1",
    },
    UlrichChernRow {
        id: "xne.4",
        rank: None,
        degree: 4,
        text: concat!(
            "(r)/(5760)(d-1)((15r^3-60r^2+20r+48)d^3-(45r^3-240r^2+340r-48)d^2+",
            "+(45r^3-300r^2+640r-432)d-15r^3+120r^2-320r+288)1",
        ),
    },
    UlrichChernRow {
        id: "xne.5",
        rank: Some(5),
        degree: 5,
        text: "(1)/(2304)(d-1)^2(5d-1)(23d^2-54d+19)1",
    },
    UlrichChernRow {
        id: "xne.6",
        rank: Some(6),
        degree: 5,
        text: "(1)/(40)(d-1)^2(2d-1)(2d-3)(3d-1)1",
    },
    UlrichChernRow {
        id: "xne.7",
        rank: Some(6),
        degree: 6,
        text: "(1)/(1680)(d-1)(2d-1)(3d-1)(6d-1)(5-3d+2d^2)1",
    },
    UlrichChernRow {
        id: "xne.8",
        rank: Some(7),
        degree: 5,
        text: "(7)/(3840)(d-1)^2(7d-3)(59-150d+79d^2)",
    },
    UlrichChernRow {
        id: "xne.9",
        rank: Some(7),
        degree: 6,
        text: concat!(
            "(1)/(414720)(d-1)(-13837+119975d-375310d^2+524330d^3-330853d^4",
            "+87215d^5)1",
        ),
    },
    UlrichChernRow {
        id: "xne.10",
        rank: Some(7),
        degree: 7,
        text: "(1)/(829440)(d-1)^2(7d-1)(913-5620d+10170d^2-6380d^3+2837d^4)1",
    },
];

pub const TOP_CHERN: &[TopChernRow] = &[
    TopChernRow {
        id: "ulr.ix",
        n: 3,
        text: "2r(d-m)+e1e2-(1)/(3)e1^3+(1)/(2)(-c1)(e1^2-2e2)-(1)/(6)((-c1)^2+c2)e1",
    },
    TopChernRow {
        id: "ulr.x",
        n: 4,
        text: concat!(
            "-6r(d-m)-(1)/(4)(-c1)c2e1+(1)/(4)((-c1)^2+c2)(e1^2-2e2)-(1)/(2)(",
            "-c1)(e1^3-3e1e2+3e3)+(1)/(4)(e1^4-4e1^2e2+4e1e3+2e2^2)",
        ),
    },
    TopChernRow {
        id: "ulr.xi",
        n: 5,
        text: concat!(
            "24r(d-m)-(1)/(5)e1^5+e1^3e2-e1^2e3-e1e2^2+e1e4+e2e3+(1)/(2)(e1^2",
            "-2e2)c2(-c1)+(1)/(30)e1((-c1)^4-4(-c1)^2c2+(-c1)c3-3c2^2+c4)",
            "+(1)/(2)(e1^4-4e1^2e2+4e1e3+2e2^2-4e4)(-c1)-(1)/(3)((-c1)^2+c2)(e1^3",
            "-3e1e2+3e3)",
        ),
    },
    TopChernRow {
        id: "ulr.xii",
        n: 6,
        text: concat!(
            "-120r(d-m)-(1)/(12)e1(-(-c1)^3c2+3(-c1)c2^2-(-c1)^2c3-(-c1)c4)",
            "-(1)/(12)((-c1)^4e1^2-4(-c1)^2c2e1^2-3c2^2e1^2+(-c1)c3e1^2+c4e1^2-2(",
            "-c1)^4e2+8(-c1)^2c2e2+6c2^2e2-2(-c1)c3e2-2c4e2)-(5)/(6)(-c1)c2(e1^3",
            "-3e1e2+3e3)+(5)/(12)((-c1)^2+c2)(e1^4-4e1^2e2+2e2^2+4e1e3-4e4)",
            "-(1)/(2)(-c1)(e1^5-5e1^3e2+5e1e2^2+5e1^2e3-5e2e3-5e1e4+5e5)",
            "+(1)/(6)e1^6-e1^4e2+(3)/(2)e1^2e2^2-(1)/(3)e2^3+e1^3e3-2e1e2e3",
            "+(1)/(2)e3^2-e1^2e4+e2e4+e1e5",
        ),
    },
    TopChernRow {
        id: "ulr.xiii",
        n: 7,
        text: concat!(
            "720r(d-m)+(1)/(2)(-c1)(e1^6-6e1^4e2+9e1^2e2^2-2e2^3+6e1^3e3-12e1e2e3",
            "+3e3^2-6e1^2e4+6e2e4+6e1e5-6e6)-(1)/(2)((-c1)^2+c2)(e1^5-5e1^3e2",
            "+5e1e2^2+5e1^2e3-5e2e3-5e1e4+5e5)+(5)/(4)(-c1)c2(e1^4-4e1^2e2+2e2^2",
            "+4e1e3-4e4)+(1)/(6)((-c1)^4e1^3-4(-c1)^2c2e1^3-3c2^2e1^3+(-c1)c3e1^3",
            "+c4e1^3-3(-c1)^4e1e2+12(-c1)^2c2e1e2+9c2^2e1e2-3(-c1)c3e1e2-3c4e1e2+3(",
            "-c1)^4e3-12(-c1)^2c2e3-9c2^2e3+3(-c1)c3e3+3c4e3)-(1)/(4)(-c1)((",
            "-c1)^2c2e1^2-3c2^2e1^2+(-c1)c3e1^2+c4e1^2-2(-c1)^2c2e2+6c2^2e2-2(",
            "-c1)c3e2-2c4e2)-(1)/(84)e1(2(-c1)^6-12(-c1)^4c2+11(-c1)^2c2^2+10c2^3",
            "-5(-c1)^3c3-11(-c1)c2c3-c3^2-5(-c1)^2c4-9c2c4+2(-c1)c5+2c6)",
            "-(1)/(7)e1^7+e1^5e2-2e1^3e2^2+e1e2^3-e1^4e3+3e1^2e2e3-e2^2e3-e1e3^2",
            "+e1^3e4-2e1e2e4+e3e4-e1^2e5+e2e5+e1e6",
        ),
    },
];

/// Intersection numbers and Euler characteristics, keyed by report id.
pub const LOCUS_VALUES: &[(&str, &str)] = &[
    (
        "case.6.4.chi_OZ[m=0]",
        concat!(
            "-(d)/(340200)(d-1)(2d-1)(2303699-4840923d+3320849d^2-947157d^3",
            "+97472d^4)",
        ),
    ),
    (
        "case.6.4.chi_OZ[m=1]",
        concat!(
            "-(d)/(340200)(d-1)(2d-1)(4034939-7679703d+4543679d^2-1107807d^3",
            "+97472d^4)",
        ),
    ),
    (
        "case.6.4.chi_OZ[m=2]",
        concat!(
            "-(d)/(340200)(d-1)(2d-1)(6454139-11403003d+5951729d^2-1268457d^3",
            "+97472d^4)",
        ),
    ),
    (
        "case.6.4.KZ_HZ2",
        "(d)/(45)(d-1)(2d-1)(152-204d+49d^2)",
    ),
    (
        "case.6.4.KZ2_HZ+HZ_c2Z",
        "(d)/(15)(d-1)(2d-1)(-754+1288d-598d^2+85d^3)",
    ),
    (
        "case.6.4.HZ_c2Z",
        "(d)/(45)(d-1)(2d-1)(-722+1272d-625d^2+96d^3)",
    ),
    (
        "case.6.4.KZ2_HZ",
        "(d)/(45)(d-1)(2d-1)(3d-10)(154-213d+53d^2)",
    ),
    (
        "case.6.4.KZ_c2Z",
        "(d)/(135)(d-1)(2d-1)(21940-46104d+31627d^2-9021d^3+928d^4)",
    ),
    (
        "case.6.5.chi_OZ[m=0]",
        concat!(
            "(d)/(1548288)(d-1)(-3500495+19507441d-37476458d^2+30435862d^3",
            "-10691399d^4+1349497d^5)",
        ),
    ),
    (
        "case.6.5.chi_OZ[m=1]",
        concat!(
            "(d)/(1548288)(d-1)(-4964783+27017713d-49890986d^2+37892374d^3",
            "-12037415d^4+1349497d^5)",
        ),
    ),
    (
        "case.6.5.KZ_HZ",
        "(d)/(1152)(d-1)(1992-10283d+17197d^2-10573d^3+2003d^4)",
    ),
    (
        "case.6.5.KZ2",
        "(7d)/(4608)(d-3)(d-1)(4041-21070d+35720d^2-22370d^3+4351d^4)",
    ),
    (
        "case.6.5.c2Z",
        concat!(
            "(d)/(27648)(d-1)(-240941+1355623d-2644982d^2+2203138d^3-803357d^4",
            "+106327d^5)",
        ),
    ),
    (
        "case.8.6.chi_OZ[m=0]",
        concat!(
            "-(d)/(84672000)(d-1)(2d-1)(3d-1)(-287792399+809751606d-812826025d^2",
            "+397479390d^3-96129996d^4+9172584d^5)",
        ),
    ),
    (
        "case.8.6.chi_OZ[m=1]",
        concat!(
            "-(d)/(84672000)(d-1)(2d-1)(3d-1)(-445115999+1180443606d-1099476025d^2",
            "+492231390d^3-107520396d^4+9172584d^5)",
        ),
    ),
    (
        "case.8.6.chi_OZ[m=2]",
        concat!(
            "-(d)/(84672000)(d-1)(2d-1)(3d-1)(-650571599+1646542806d-1441062025d^2",
            "+596660190d^3-118910796d^4+9172584d^5)",
        ),
    ),
    (
        "case.8.6.KZ_HZ2",
        "(d)/(840)(d-1)(2d-1)(3d-1)(-829+1683d-1006d^2+192d^3)",
    ),
    (
        "case.8.6.KZ2_HZ+HZ_c2Z",
        "(d)/(280)(d-1)(2d-1)(3d-1)(5372-12957d+10341d^2-3568d^3+452d^4)",
    ),
    (
        "case.8.6.HZ_c2Z",
        "(d)/(840)(d-1)(2d-1)(3d-1)(5209-12778d+10429d^2-3712d^3+492d^4)",
    ),
    (
        "case.8.6.KZ2_HZ",
        "(d)/(840)(d-1)(2d-1)(3d-1)(4d-13)(-839+1749d-1046d^2+216d^3)",
    ),
    (
        "case.8.6.KZ_c2Z",
        concat!(
            "(d)/(420)(d-1)(2d-1)(3d-1)(-34261+96399d-96765d^2+47319d^3-11444d^4",
            "+1092d^5)",
        ),
    ),
    (
        "case.8.7.chi_OZ[m=0]",
        concat!(
            "(d(d-1))/(28665446400)(-22024437079+208787633321d-751494758379d^2",
            "+1321535623701d^3-1237566062181d^4+646601246619d^5-177940027481d^6",
            "+19863510439d^7)",
        ),
    ),
    (
        "case.8.7.chi_OZ[m=1]",
        concat!(
            "(d(d-1))/(28665446400)(-29037317719+272178069161d-963544031979d^2",
            "+1653635796501d^3-1495712707941d^4+747580244379d^5-193219521881d^6",
            "+19863510439d^7)",
        ),
    ),
    (
        "case.8.7.KZ_HZ",
        concat!(
            "(d(d-1))/(414720)(189082-1714239d+5760375d^2-9085050d^3+7138668d^4",
            "-2834631d^5+442115d^6)",
        ),
    ),
    (
        "case.8.7.KZ2",
        concat!(
            "(d(d-1))/(184320)(d-3)(382729-3493098d+11828355d^2-18805500d^3",
            "+14902671d^4-6006042d^5+983525d^6)",
        ),
    ),
    (
        "case.8.7.c2Z",
        concat!(
            "(d(d-1))/(9953280)(-29766391+283399229d-1026407283d^2+1821176337d^3",
            "-1726796469d^4+916447911d^5-257756897d^6+29656843d^7)",
        ),
    ),
    (
        "x6z.ii",
        "(d)/(3)(d-1)^2(2d-1)",
    ),
    (
        "x6z.v",
        "(d)/(1152)(d-1)(-187+893d-1277d^2+523d^3)",
    ),
    (
        "x8z.ii",
        "(d)/(40)(d-1)^2(2d-1)(2d-3)(3d-1)",
    ),
    (
        "x8z.v",
        concat!(
            "(d)/(414720)(d-1)(-13837+119975d-375310d^2+524330d^3-330853d^4",
            "+87215d^5)",
        ),
    ),
];
