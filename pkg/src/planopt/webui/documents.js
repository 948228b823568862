// Shapes of the JSON documents the service speaks. These mirror the
// server's codecs; the UI never invents fields of its own.
/** The closed set of keys objectives and constraints may reference. */
export function quantityKeys(instance) {
    const keys = ["total_cost", "total_outcome"];
    for (const r of instance.receptor_names)
        keys.push(`receptor:${r}`);
    for (const e of instance.emission_names)
        keys.push(`emission:${e}`);
    for (const i of Object.keys(instance.indicator_tables))
        keys.push(`indicator:${i}`);
    return keys;
}
/** Group label for one emission; instances without grouping get one bucket. */
export function emissionGroup(instance, emission) {
    return instance.emission_groups?.[emission] ?? "all pollutants";
}
