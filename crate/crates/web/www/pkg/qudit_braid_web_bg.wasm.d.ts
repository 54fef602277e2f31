/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const braidMatrix: (a: number, b: number) => [number, number, number, number];
export const ghzQProfile: (a: number, b: number, c: number) => [number, number, number, number];
export const ghzState: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const verifyBraid: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
