//! The embedded service registry data.
//!
//! Function identifiers are lowercase kebab-case tokens of the source
//! phrases so that set operations have canonical keys; the phrase is kept
//! alongside. Stakeholder strings keep their uppercase community-role
//! spelling. KET attributions intersect each bundle's technology list with
//! the functions a service needs; where that intersection takes a judgement
//! call, the entry carries a note instead of a silent guess.

use super::{DayClass, Ket, ServiceEntry, ServiceFunction};
use crate::metrics::Bundle;

type Func = (&'static str, &'static str);

const ACCURATE_VESSEL_POSITIONING: Func = (
    "accurate-vessel-positioning",
    "Accurate Vessel Positioning (terrestrial and satellite)",
);
const FULL_CARGO_INFORMATION: Func = (
    "full-information-about-cargo",
    "Full information about cargo",
);
const LOW_RATE_VESSEL_PORT_COMM: Func = (
    "low-rate-vessel-port-bidirectional-communication",
    "Low-Rate Vessel-Port bi-directional communication",
);
const HIGH_RATE_VESSEL_PORT_COMM: Func = (
    "high-rate-real-time-vessel-port-bidirectional-communication",
    "High-Rate/Real-Time Vessel-Port bi-directional communication",
);
const VESSEL_PORT_COMM: Func = (
    "vessel-port-bidirectional-communication",
    "Vessel-Port bi-directional communication",
);
const ACCURATE_BATHYMETRIC_DATA: Func = ("accurate-bathymetric-data", "Accurate Bathymetric Data");
const METEO_MARINE_MONITORING: Func = (
    "real-time-meteo-marine-monitoring",
    "Real-Time meteo-marine monitoring",
);
const HD_VIDEO_SOURCES: Func = (
    "hd-video-sources-on-vessel-and-port",
    "HD video sources on vessel & port",
);
const IOT_DISTRIBUTED_NETWORK: Func = (
    "iot-based-distributed-network",
    "IoT-based distributed network",
);
const DATA_AGGREGATION_OLAP: Func = (
    "data-aggregation-and-on-line-analytical-processing",
    "Data aggregation and on-line analytical processing",
);
const DATA_MINING: Func = (
    "data-mining-and-knowledge-extraction",
    "Data mining and knowledge extraction",
);
const CARGO_PERVASIVE_MONITORING: Func = (
    "cargo-pervasive-monitoring-and-control",
    "(Containerized and General) cargo pervasive monitoring and control in port areas (docks, warehouses, stores)",
);
const PORT_TERMINALS_TRUCKS_COMM: Func = (
    "real-time-communication-port-terminals-trucks",
    "Real-time communication Port-Terminals-Trucks",
);
const USER_VEHICLE_GOODS_ACCOUNTING: Func = (
    "accounting-for-users-vehicles-and-goods",
    "Accounting for users, vehicles and goods",
);
const GATE_TRANSIT_INTEGRATION: Func = (
    "integration-with-gate-transit-system",
    "Integration with Gate Transit System",
);
const PORT_ROAD_RAIL_COMM: Func = (
    "port-to-port-road-railways-communications",
    "Port-to-Port, Port-to-Road, Port-to-Railways communications",
);
const POC_TO_FULL_SCALE: Func = (
    "moving-from-poc-to-full-scale-deployment",
    "Moving from POC to full-scale deployment",
);
const DISTRIBUTED_MONITORING_NETWORK: Func = (
    "distributed-monitoring-network",
    "Distributed monitoring network",
);
const JOURNEY_PLANNER: Func = (
    "journey-planner-and-manager",
    "Journey planner and manager (booking, payment)",
);
const JIT_INFORMATION: Func = ("jit-information-delivery", "JIT information delivery");
const MAAS_PLATFORM: Func = ("maas-platform", "MaaS platform");
const PORT_ROAD_DATA_EXCHANGE: Func = (
    "port-to-road-full-fledged-data-exchange",
    "Port-to-road full-fledged data exchange",
);
const DATEX_ADAPTATION: Func = (
    "datex-to-c-its-adaptation-protocol",
    "Standard adaptation protocol from DATEX to C-ITS",
);
const PORT_VEHICLES_PEDESTRIANS_COMM: Func = (
    "real-time-communication-port-vehicles-pedestrians",
    "Real-time communication Port-Vehicles-Pedestrians",
);

const NOTE_SATELLITE: &str = "Positioning functions name satellite sources, but the bundle \
                              technology mappings do not cover space assets, so no satellite \
                              KET is attributed.";
const NOTE_A4_RATE: &str = "The communication function carries no rate qualifier; the 5G \
                            mapping applies only to the high-rate/real-time variant, so 5G is \
                            not attributed.";
const NOTE_B2_ACCOUNTING: &str = "IoT attribution reads the accounting function as the \
                                  bundle's automatic identification of users, vehicles and \
                                  goods.";
const NOTE_B4_BLOCKCHAIN: &str = "Blockchain attribution follows the bundle's reliable \
                                  port-to-inland information exchange; transcriber call.";
const NOTE_MOBILITY_NO_KET: &str = "The passenger-transport bundle names no reference-set \
                                    technology for these functions; the KET set is left empty.";

fn functions(list: &[Func]) -> Vec<ServiceFunction> {
    list.iter()
        .map(|(token, phrase)| ServiceFunction {
            token: (*token).to_string(),
            phrase: (*phrase).to_string(),
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn entry(
    code: &str,
    name: &str,
    bundle: Bundle,
    day: DayClass,
    enabling: &[Func],
    missing: &[Func],
    stakeholders: &[&str],
    kets: &[Ket],
    notes: &[&str],
) -> ServiceEntry {
    ServiceEntry {
        code: code.to_string(),
        name: name.to_string(),
        bundle,
        day,
        enabling_functions: functions(enabling),
        missing_functions: functions(missing),
        stakeholders: stakeholders.iter().map(|s| (*s).to_string()).collect(),
        kets: kets.to_vec(),
        notes: notes.iter().map(|n| (*n).to_string()).collect(),
    }
}

pub(super) fn entries() -> Vec<ServiceEntry> {
    vec![
        entry(
            "A.1",
            "Vessel Traffic Management",
            Bundle::Navigation,
            DayClass::Day1,
            &[
                ACCURATE_VESSEL_POSITIONING,
                FULL_CARGO_INFORMATION,
                LOW_RATE_VESSEL_PORT_COMM,
            ],
            &[],
            &[
                "SHIPPING COMPANIES",
                "TERMINALS",
                "FREIGHT FORWARDERS",
                "INSURANCE COMPANIES",
                "PORT AUTHORITY",
                "COAST GUARD",
            ],
            &[Ket::Blockchain],
            &[NOTE_SATELLITE],
        ),
        entry(
            "A.2",
            "Vessel maneuvering in port waters",
            Bundle::Navigation,
            DayClass::Day2,
            &[
                ACCURATE_VESSEL_POSITIONING,
                ACCURATE_BATHYMETRIC_DATA,
                METEO_MARINE_MONITORING,
                HD_VIDEO_SOURCES,
            ],
            &[HIGH_RATE_VESSEL_PORT_COMM],
            &["INSURANCE COMPANIES", "SHIPPING COMPANIES", "COAST GUARD"],
            &[Ket::FiveG, Ket::Iot],
            &[NOTE_SATELLITE],
        ),
        entry(
            "A.3",
            "Incident at Sea",
            Bundle::Navigation,
            DayClass::Day1_5,
            &[ACCURATE_VESSEL_POSITIONING, IOT_DISTRIBUTED_NETWORK],
            &[DATA_AGGREGATION_OLAP],
            &[
                "SHIPPING COMPANIES",
                "FREIGHT FORWARDERS",
                "INSURANCE COMPANIES",
                "COAST GUARD",
            ],
            &[Ket::Iot, Ket::AiMl],
            &[NOTE_SATELLITE],
        ),
        entry(
            "A.4",
            "Suspicious Vessel / Maneuver",
            Bundle::Navigation,
            DayClass::Day1_5,
            &[ACCURATE_VESSEL_POSITIONING, VESSEL_PORT_COMM],
            &[DATA_AGGREGATION_OLAP],
            &["COAST GUARD", "INSURANCE COMPANIES"],
            &[Ket::AiMl],
            &[NOTE_SATELLITE, NOTE_A4_RATE],
        ),
        entry(
            "A.5",
            "Berth allocation and docking",
            Bundle::Navigation,
            DayClass::Day1,
            &[
                ACCURATE_VESSEL_POSITIONING,
                ACCURATE_BATHYMETRIC_DATA,
                LOW_RATE_VESSEL_PORT_COMM,
            ],
            &[],
            &["SHIPPING COMPANIES", "TERMINALS", "INSURANCE COMPANIES"],
            &[Ket::Iot],
            &[NOTE_SATELLITE],
        ),
        entry(
            "B.1",
            "Freight Management and Control",
            Bundle::Freight,
            DayClass::Day1,
            &[CARGO_PERVASIVE_MONITORING],
            &[],
            &[
                "LOCAL SMEs",
                "FREIGHT FORWARDERS",
                "HAULIERS",
                "TERMINALS",
                "INSURANCE COMPANIES",
                "CUSTOM OFFICES",
            ],
            &[Ket::Iot],
            &[],
        ),
        entry(
            "B.2",
            "Gate Automation",
            Bundle::Freight,
            DayClass::Day1_5,
            &[USER_VEHICLE_GOODS_ACCOUNTING],
            &[GATE_TRANSIT_INTEGRATION],
            &["HAULIERS"],
            &[Ket::Iot],
            &[NOTE_B2_ACCOUNTING],
        ),
        entry(
            "B.3",
            "In-port Smart Navigation",
            Bundle::Freight,
            DayClass::Day1,
            &[PORT_TERMINALS_TRUCKS_COMM],
            &[],
            &["SHIPPING COMPANIES", "HAULIERS", "INSURANCE COMPANIES"],
            &[Ket::FiveG],
            &[],
        ),
        entry(
            "B.4",
            "Freight Routing",
            Bundle::Freight,
            DayClass::Day1_5,
            &[PORT_ROAD_RAIL_COMM],
            &[POC_TO_FULL_SCALE],
            &["INSURANCE COMPANIES", "PORT AUTHORITY", "CUSTOM OFFICES"],
            &[Ket::Blockchain],
            &[NOTE_B4_BLOCKCHAIN],
        ),
        entry(
            "B.5",
            "Incident at Landside",
            Bundle::Freight,
            DayClass::Day1_5,
            &[DISTRIBUTED_MONITORING_NETWORK],
            &[DATA_AGGREGATION_OLAP],
            &["HAULIERS", "INSURANCE COMPANIES"],
            &[Ket::Iot, Ket::AiMl],
            &[],
        ),
        entry(
            "C.1",
            "Infomobility and journey monitor",
            Bundle::Mobility,
            DayClass::Day1_5,
            &[JOURNEY_PLANNER, JIT_INFORMATION],
            &[MAAS_PLATFORM],
            &[
                "TOURISM OPERATORS",
                "TOURISTS",
                "COMMUTERS",
                "PUBLIC TRANSPORT",
            ],
            &[],
            &[NOTE_MOBILITY_NO_KET],
        ),
        entry(
            "C.2",
            "Integration with TCC",
            Bundle::Mobility,
            DayClass::Day1_5,
            &[PORT_ROAD_DATA_EXCHANGE],
            &[DATEX_ADAPTATION],
            &[
                "TOURISM OPERATORS",
                "TOURISTS",
                "INSURANCE COMPANIES",
                "PUBLIC TRANSPORT",
            ],
            &[],
            &[NOTE_MOBILITY_NO_KET],
        ),
        entry(
            "C.3",
            "In-port Smart and Autonomous Mobility (including safety)",
            Bundle::Mobility,
            DayClass::Day1_5,
            &[PORT_VEHICLES_PEDESTRIANS_COMM],
            &[POC_TO_FULL_SCALE],
            &["TOURISTS", "COMMUTERS", "INSURANCE COMPANIES"],
            &[Ket::FiveG],
            &[],
        ),
        entry(
            "D.1",
            "Pollution Level (including COx and noise)",
            Bundle::Sustainability,
            DayClass::Day1_5,
            &[DISTRIBUTED_MONITORING_NETWORK],
            &[DATA_AGGREGATION_OLAP],
            &["CITIZENS", "PORT AUTHORITY"],
            &[Ket::Iot, Ket::AiMl],
            &[],
        ),
        entry(
            "D.2",
            "Road Traffic Level",
            Bundle::Sustainability,
            DayClass::Day1_5,
            &[DISTRIBUTED_MONITORING_NETWORK],
            &[DATA_AGGREGATION_OLAP],
            &["PORT AUTHORITY", "CITIZENS"],
            &[Ket::Iot, Ket::AiMl],
            &[],
        ),
        entry(
            "D.3",
            "Dynamic pricing (all services) to Vessels, Terminals",
            Bundle::Sustainability,
            DayClass::Day2,
            &[DISTRIBUTED_MONITORING_NETWORK],
            &[DATA_AGGREGATION_OLAP, DATA_MINING],
            &["CITIZENS", "HAULIERS", "PORT AUTHORITY"],
            &[Ket::Iot, Ket::AiMl],
            &[],
        ),
    ]
}
