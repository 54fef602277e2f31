/* tslint:disable */
/* eslint-disable */

/**
 * Row-major braid matrix entries, interleaved.
 */
export function braidMatrix(d: number, sites: number): Float64Array;

export function ghzQProfile(d: number, k: Uint32Array): Float64Array;

export function ghzState(d: number, k: Uint32Array, via_braid: boolean): Float64Array;

/**
 * Braid relation and unitarity residuals as a JSON report.
 */
export function verifyBraid(d: number, sites: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly braidMatrix: (a: number, b: number) => [number, number, number, number];
    readonly ghzQProfile: (a: number, b: number, c: number) => [number, number, number, number];
    readonly ghzState: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly verifyBraid: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
