/* tslint:disable */
/* eslint-disable */

/**
 * Abelianization of a word: `eps` or `(tau_deg, sigma_deg)`.
 */
export function abelianize(word: string, mod2: boolean): string;

/**
 * Text form of the signed partial permutation `word` evaluates to.
 */
export function evaluate(word: string, n: number): string;

/**
 * Strand diagram of the image of `word` as an SVG document.
 */
export function render(word: string, n: number): string;

/**
 * JSON verification report for the presentation `id` at rank `n`.
 */
export function verify(id: string, n: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly abelianize: (a: number, b: number, c: number) => [number, number, number, number];
    readonly evaluate: (a: number, b: number, c: number) => [number, number, number, number];
    readonly render: (a: number, b: number, c: number) => [number, number, number, number];
    readonly verify: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
